//! `ā`-parking functions and the sum enumerator
//! `I_ā(q) = Σ_{b ∈ P_ā} q^{b_1 + … + b_n − n}`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinatorics::{
    beta, kappa_enumerate_weak, multinomial_of_parts, subset_of_avector, AVector, WeakComposition,
};
pub use crate::polynomials::UniPoly;
use crate::{Cap, Error, Result};

/// A sequence whose increasing rearrangement `b'` satisfies `b'_i ≤ a_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AParkingFunction {
    values: Vec<u32>,
    bound: AVector,
}

impl AParkingFunction {
    pub fn new(values: Vec<u32>, bound: AVector) -> Result<Self> {
        if is_a_parking(&values, &bound)? {
            Ok(AParkingFunction { values, bound })
        } else {
            Err(Error::NotAParkingFunction(values))
        }
    }

    pub(crate) fn new_unchecked(values: Vec<u32>, bound: AVector) -> Self {
        debug_assert!(is_a_parking(&values, &bound).unwrap_or(false));
        AParkingFunction { values, bound }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn bound(&self) -> &AVector {
        &self.bound
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `b_1 + … + b_n − n`.
    pub fn sum_statistic(&self) -> u64 {
        sum_statistic(&self.values)
    }
}

fn sum_statistic(values: &[u32]) -> u64 {
    values.iter().map(|&b| b as u64 - 1).sum()
}

pub fn is_a_parking(values: &[u32], a: &AVector) -> Result<bool> {
    if values.len() != a.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: values.len(),
        });
    }
    if values.contains(&0) {
        return Err(Error::NonPositiveEntry);
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().zip(a.entries()).all(|(b, a)| b <= a))
}

/// Lexicographic stream of the value sequences in `P_ā`.
///
/// A prefix is kept only if it can still be completed, which is checked by
/// completing it with ones: `#{b ≤ j} ≥ #{i : a_i ≤ j}` for every level `j`.
#[derive(Debug, Clone)]
pub struct ParkingSequences {
    n: usize,
    max: u32,
    /// `need[j] = #{ i : a_i ≤ j }`.
    need: Vec<usize>,
    /// Positions below `frozen` never change.
    frozen: usize,
    cur: Vec<u32>,
    hist: Vec<usize>,
    state: IterState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl ParkingSequences {
    fn new(a: &AVector, first: Option<u32>) -> Self {
        let n = a.len();
        let max = a.max_level();
        let mut need = vec![0usize; max as usize + 1];
        for &x in a.entries() {
            need[x as usize] += 1;
        }
        for j in 1..need.len() {
            need[j] += need[j - 1];
        }
        let mut cur = vec![1u32; n];
        let mut frozen = 0;
        if let Some(f) = first {
            cur[0] = f;
            frozen = 1;
        }
        let mut hist = vec![0usize; max as usize + 2];
        for &b in &cur {
            hist[b.min(max + 1) as usize] += 1;
        }
        let mut it = ParkingSequences {
            n,
            max,
            need,
            frozen,
            cur,
            hist,
            state: IterState::Fresh,
        };
        if first.is_some_and(|f| f == 0 || f > max) || !it.feasible(n) {
            it.state = IterState::Done;
        }
        it
    }

    /// Whether the first `len` entries of `cur`, padded with ones, satisfy
    /// the bound. `hist` must hold the counts of exactly those entries.
    fn feasible(&self, len: usize) -> bool {
        let ones = self.n - len;
        let mut cum = ones;
        for j in 1..=self.max as usize {
            cum += self.hist[j];
            if cum < self.need[j] {
                return false;
            }
        }
        true
    }

    /// Advance and borrow the next sequence, avoiding an allocation.
    pub fn next_slice(&mut self) -> Option<&[u32]> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                return Some(&self.cur);
            }
            IterState::Running => {}
        }
        for p in (self.frozen..self.n).rev() {
            let old = self.cur[p];
            self.hist[old as usize] -= 1;
            if old < self.max {
                self.hist[old as usize + 1] += 1;
                if self.feasible(p + 1) {
                    self.cur[p] = old + 1;
                    for x in &mut self.cur[p + 1..] {
                        *x = 1;
                    }
                    self.hist[1] += self.n - p - 1;
                    return Some(&self.cur);
                }
                self.hist[old as usize + 1] -= 1;
            }
        }
        self.state = IterState::Done;
        None
    }
}

impl Iterator for ParkingSequences {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        self.next_slice().map(<[u32]>::to_vec)
    }
}

/// Value sequences of `P_ā` in lexicographic order.
pub fn parking_sequences(a: &AVector, cap: Cap) -> Result<ParkingSequences> {
    cap.check(a.len())?;
    Ok(ParkingSequences::new(a, None))
}

/// The part of `P_ā` with `b_1 = first`, in lexicographic order.
pub fn parking_sequences_with_first(a: &AVector, first: u32, cap: Cap) -> Result<ParkingSequences> {
    cap.check(a.len())?;
    Ok(ParkingSequences::new(a, Some(first)))
}

pub fn enumerate_a_parking(
    a: &AVector,
    cap: Cap,
) -> Result<impl Iterator<Item = AParkingFunction> + '_> {
    Ok(parking_sequences(a, cap)?.map(move |v| AParkingFunction::new_unchecked(v, a.clone())))
}

/// `|P_ā|` as `Σ_{α ∈ Κ_γ} (n choose α)`, with `γ` the level run lengths of
/// `ā` (zero runs for skipped levels).
pub fn count_a_parking(a: &AVector) -> BigUint {
    kappa_enumerate_weak(&a.level_runs())
        .map(|alpha| multinomial_of_parts(alpha.parts()))
        .sum()
}

/// `α_j = #{ i : b_i = j }` for `j = 1..=a_n`.
pub fn content(b: &AParkingFunction) -> WeakComposition {
    let mut parts = vec![0usize; b.bound().max_level() as usize];
    for &v in b.values() {
        parts[v as usize - 1] += 1;
    }
    WeakComposition::new(parts)
}

/// `I_ā(q)` by enumeration of `P_ā`, split over the value of `b_1`.
pub fn sum_enumerator(a: &AVector, cap: Cap) -> Result<UniPoly> {
    cap.check(a.len())?;
    let n = a.len();
    let max_exp = n * (a.max_level() as usize - 1);
    let counts = (1..=a.max_level())
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; max_exp + 1];
            let mut it = ParkingSequences::new(a, Some(first));
            while let Some(b) = it.next_slice() {
                counts[sum_statistic(b) as usize] += 1;
            }
            counts
        })
        .reduce(
            || vec![0u64; max_exp + 1],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
                x
            },
        );
    Ok(UniPoly::from_counts(&counts))
}

/// `I_n(q)` from the classical parking functions:
/// `Σ_{b ∈ P_n} q^{Σb − n} = q^{n choose 2} I_n(1/q)`.
pub fn inversion_enumerator_via_parking(n: usize, cap: Cap) -> Result<UniPoly> {
    let s = sum_enumerator(&AVector::classical(n), cap)?;
    Ok(s.reversed(n * (n - 1) / 2))
}

pub fn eval_at_minus_one(p: &UniPoly) -> BigInt {
    p.eval_at_minus_one()
}

/// The value of `I_ā(−1)` predicted by the involution argument: zero if
/// `a_1` is even, otherwise `(−1)^{a_1 + … + a_n − n} β_n(S)` with
/// `S = { i : a_{i+1} odd }`.
pub fn predicted_at_minus_one(a: &AVector) -> BigInt {
    if a.entries()[0].is_multiple_of(2) {
        return BigInt::zero();
    }
    let b = BigInt::from(beta(&subset_of_avector(a)));
    if (a.sum() - a.len() as u64).is_multiple_of(2) {
        b
    } else {
        -b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{a_of_composition, kappa_enumerate, Composition};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn av(e: &[u32]) -> AVector {
        AVector::new(e.to_vec()).unwrap()
    }

    /// Filter `{1..=a_n}^n` by the definition.
    fn brute_force(a: &AVector) -> Vec<Vec<u32>> {
        let n = a.len();
        let m = a.max_level();
        let mut out = Vec::new();
        let mut cur = vec![1u32; n];
        loop {
            let mut s = cur.clone();
            s.sort_unstable();
            if s.iter().zip(a.entries()).all(|(x, y)| x <= y) {
                out.push(cur.clone());
            }
            let mut p = n;
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                if cur[p] < m {
                    cur[p] += 1;
                    break;
                }
                cur[p] = 1;
            }
        }
    }

    #[test]
    fn membership_examples() {
        let a = av(&[3, 3, 6, 7, 7, 7, 8]);
        assert!(is_a_parking(&[5, 7, 2, 5, 1, 5, 2], &a).unwrap());
        assert!(is_a_parking(&[1; 7], &a).unwrap());
        assert!(!is_a_parking(&[2, 2], &av(&[1, 2])).unwrap());
        assert!(matches!(
            is_a_parking(&[1], &av(&[1, 2])),
            Err(Error::LengthMismatch { .. })
        ));
        assert_eq!(
            is_a_parking(&[0, 1], &av(&[1, 2])),
            Err(Error::NonPositiveEntry)
        );
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<_> = parking_sequences(&av(&[1, 2]), Cap::default())
            .unwrap()
            .collect();
        assert_eq!(got, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
        let got: Vec<_> = parking_sequences(&av(&[1]), Cap::default())
            .unwrap()
            .collect();
        assert_eq!(got, vec![vec![1]]);
        for n in 1..=6 {
            let count = parking_sequences(&AVector::classical(n), Cap::default())
                .unwrap()
                .count();
            assert_eq!(count, (n + 1).pow(n as u32 - 1));
        }
        assert!(matches!(
            parking_sequences(&AVector::classical(9), Cap::default()),
            Err(Error::CapExceeded { n: 9, cap: 8 })
        ));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for e in [
            &[1, 1, 3][..],
            &[2, 2, 2],
            &[1, 3, 3, 4],
            &[2, 4, 4, 5],
            &[1, 1, 1, 1],
        ] {
            let a = av(e);
            let got: Vec<_> = parking_sequences(&a, Cap::default()).unwrap().collect();
            assert_eq!(got, brute_force(&a), "a={a}");
        }
    }

    #[test]
    fn partition_by_first_value() {
        let a = av(&[1, 2, 4, 4]);
        let mut joined = Vec::new();
        for f in 1..=4 {
            joined.extend(parking_sequences_with_first(&a, f, Cap::default()).unwrap());
        }
        assert_eq!(joined, brute_force(&a));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_a_parking(&av(&[1, 2, 3])), BigUint::from(16u32));
        assert_eq!(count_a_parking(&av(&[1, 1, 1])), BigUint::from(1u32));
        assert_eq!(count_a_parking(&av(&[1, 2])), BigUint::from(3u32));
        assert_eq!(
            count_a_parking(&av(&[1, 3, 3])),
            BigUint::from(brute_force(&av(&[1, 3, 3])).len())
        );
    }

    #[test]
    fn content_examples() {
        let a = av(&[3, 3, 6, 7, 7, 7, 8]);
        let b = AParkingFunction::new(vec![5, 7, 2, 5, 1, 5, 2], a).unwrap();
        assert_eq!(content(&b).parts(), &[1, 2, 0, 0, 3, 0, 1, 0]);
        let b = AParkingFunction::new(vec![1, 1, 1], av(&[1, 2, 3])).unwrap();
        assert_eq!(content(&b).parts(), &[3, 0, 0]);
        let b = AParkingFunction::new(vec![1, 2], av(&[1, 2])).unwrap();
        assert_eq!(content(&b).parts(), &[1, 1]);
        assert!(AParkingFunction::new(vec![2, 2], av(&[1, 2])).is_err());
    }

    #[test]
    fn sum_enumerator_examples() {
        let cap = Cap::default();
        assert_eq!(
            sum_enumerator(&av(&[1, 2]), cap).unwrap().to_string(),
            "1 + 2q"
        );
        assert_eq!(sum_enumerator(&av(&[1]), cap).unwrap().to_string(), "1");
        let p = sum_enumerator(&av(&[1, 2, 3]), cap).unwrap();
        assert_eq!(p.eval_int(&BigInt::from(1)), BigInt::from(16));
        let p = sum_enumerator(&av(&[2, 2]), cap).unwrap();
        assert_eq!(p.to_string(), "1 + 2q + q^2");
        assert_eq!(eval_at_minus_one(&p), BigInt::zero());
    }

    #[test]
    fn inversion_enumerator_examples() {
        let cap = Cap::default();
        assert_eq!(
            inversion_enumerator_via_parking(2, cap)
                .unwrap()
                .to_string(),
            "2 + q"
        );
        assert_eq!(
            inversion_enumerator_via_parking(1, cap)
                .unwrap()
                .to_string(),
            "1"
        );
        let i4 = inversion_enumerator_via_parking(4, cap).unwrap();
        assert_eq!(i4.eval_int(&BigInt::from(1)), BigInt::from(125));
        assert_eq!(
            eval_at_minus_one(&inversion_enumerator_via_parking(2, cap).unwrap()),
            BigInt::from(1)
        );
    }

    #[test]
    fn contents_of_parking_functions_are_kappa() {
        for n in 1..=6usize {
            for mask in 0u32..1 << (n - 1) {
                // Compositions of n from cut positions.
                let mut parts = Vec::new();
                let mut last = 0;
                for i in 1..n {
                    if mask >> (i - 1) & 1 == 1 {
                        parts.push(i - last);
                        last = i;
                    }
                }
                parts.push(n - last);
                let gamma = Composition::new(parts).unwrap();
                let a = a_of_composition(&gamma);
                let contents: BTreeSet<_> = enumerate_a_parking(&a, Cap::default())
                    .unwrap()
                    .map(|b| content(&b))
                    .collect();
                let kappa: BTreeSet<_> = kappa_enumerate(&gamma).collect();
                assert_eq!(contents, kappa, "gamma={gamma}");
            }
        }
    }

    fn arb_avector(max_n: usize, max_entry: u32) -> impl Strategy<Value = AVector> {
        proptest::collection::vec(1..=max_entry, 1..=max_n).prop_map(|mut v| {
            v.sort_unstable();
            AVector::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn count_formula_matches_enumeration(a in arb_avector(6, 6)) {
            let listed = parking_sequences(&a, Cap::default()).unwrap().count();
            prop_assert_eq!(count_a_parking(&a), BigUint::from(listed));
            let p = sum_enumerator(&a, Cap::default()).unwrap();
            prop_assert_eq!(p.eval_int(&BigInt::from(1)), BigInt::from(listed));
        }

        #[test]
        fn membership_is_permutation_invariant(a in arb_avector(6, 6), seed in any::<u64>()) {
            let n = a.len();
            let b: Vec<u32> = (0..n).map(|i| ((seed >> (i * 3)) % a.max_level() as u64) as u32 + 1).collect();
            let base = is_a_parking(&b, &a).unwrap();
            let mut rotated = b.clone();
            rotated.rotate_left(1);
            let mut reversed = b.clone();
            reversed.reverse();
            prop_assert_eq!(is_a_parking(&rotated, &a).unwrap(), base);
            prop_assert_eq!(is_a_parking(&reversed, &a).unwrap(), base);
        }
    }
}
