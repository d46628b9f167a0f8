//! Compositions, descent sets, descent numbers `β_n(S)`, Euler numbers and
//! the dominance sets `Κ_γ`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Cap, Error, Result};

/// A composition of `n`: a sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidComposition);
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn to_weak(&self) -> WeakComposition {
        WeakComposition {
            parts: self.parts.clone(),
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// A weak composition: parts may be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition {
    parts: Vec<usize>,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// True when every prefix sum of `self` is at least the matching prefix
    /// sum of `gamma` (the membership test for `Κ_γ`, lengths aside).
    pub fn dominates(&self, gamma: &[usize]) -> bool {
        let mut lhs = 0;
        let mut rhs = 0;
        for (i, &g) in gamma.iter().enumerate() {
            lhs += self.parts.get(i).copied().unwrap_or(0);
            rhs += g;
            if lhs < rhs {
                return false;
            }
        }
        true
    }
}

impl From<Vec<usize>> for WeakComposition {
    fn from(parts: Vec<usize>) -> Self {
        WeakComposition { parts }
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.parts)
    }
}

/// A subset `S ⊆ [n-1]`, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: usize,
    members: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let max = n.saturating_sub(1);
        if let Some(&bad) = members.iter().find(|&&m| m == 0 || m > max) {
            return Err(Error::SubsetOutOfRange { member: bad, max });
        }
        Ok(DescentSet { n, members })
    }

    pub fn empty(n: usize) -> Self {
        DescentSet {
            n,
            members: Vec::new(),
        }
    }

    /// `{2, 4, 6, …} ∩ [n-1]`, the descent set of alternating permutations.
    pub fn alternating(n: usize) -> Self {
        DescentSet {
            n,
            members: (2..n).step_by(2).collect(),
        }
    }

    /// Decode bit `i-1` of `mask` as membership of `i`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::new(n, (1..64).filter(|i| mask >> (i - 1) & 1 == 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Every subset of `[n-1]`, in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = DescentSet> {
        let bits = n.saturating_sub(1);
        (0u64..1 << bits).map(move |mask| DescentSet::from_mask(n, mask).expect("mask in range"))
    }

    /// Every subset of `{2, …, n-1}`, i.e. the admissible sets for `Z_S`.
    pub fn all_without_one(n: usize) -> impl Iterator<Item = DescentSet> {
        DescentSet::all(n).filter(|s| !s.contains(1))
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// A non-decreasing sequence of positive integers `ā = (a_1, …, a_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AVector {
    entries: Vec<u32>,
}

impl AVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        }
        if entries.contains(&0) {
            return Err(Error::NonPositiveEntry);
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotNonDecreasing(entries));
        }
        Ok(AVector { entries })
    }

    /// `(1, 2, …, n)`: the bound of ordinary parking functions.
    pub fn classical(n: usize) -> Self {
        AVector {
            entries: (1..=n as u32).collect(),
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_level(&self) -> u32 {
        *self.entries.last().expect("non-empty")
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&a| a as u64).sum()
    }

    /// Run lengths of each level `1..=a_n`; levels absent from `ā` give zero
    /// parts. Inverse of [`a_of_composition`] on compositions.
    pub fn level_runs(&self) -> WeakComposition {
        let mut parts = vec![0usize; self.max_level() as usize];
        for &a in &self.entries {
            parts[a as usize - 1] += 1;
        }
        WeakComposition { parts }
    }
}

impl fmt::Display for AVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// `comp(S) = (1, δ_1, …, δ_{k-1})` where the `δ_i` are the run lengths of the
/// word `u_1 … u_{n-1}` with `u_i = a` for `i ∉ S` and `u_i = b` for `i ∈ S`.
pub fn comp_of_subset(set: &DescentSet) -> Result<Composition> {
    if set.contains(1) {
        return Err(Error::SubsetContainsOne);
    }
    let mut parts = vec![1];
    let mut run = 0;
    let mut in_s = false;
    for i in 1..set.n() {
        let here = set.contains(i);
        if run > 0 && here != in_s {
            parts.push(run);
            run = 0;
        }
        in_s = here;
        run += 1;
    }
    if run > 0 {
        parts.push(run);
    }
    Composition::new(parts)
}

/// `ā(γ)`: `γ_1` ones, then `γ_2` twos, and so on.
pub fn a_of_composition(gamma: &Composition) -> AVector {
    let entries = gamma
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(level, &run)| std::iter::repeat_n(level as u32 + 1, run))
        .collect();
    AVector { entries }
}

/// `S = { i ∈ [n-1] : a_{i+1} odd }`.
pub fn subset_of_avector(a: &AVector) -> DescentSet {
    let e = a.entries();
    DescentSet {
        n: e.len(),
        members: (1..e.len()).filter(|&i| e[i] % 2 == 1).collect(),
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Multinomial coefficient of the parts, with `n` taken to be their sum.
pub fn multinomial_of_parts(parts: &[usize]) -> BigUint {
    // Build as a product of binomials to keep intermediates small.
    let mut acc = BigUint::one();
    let mut total = 0usize;
    for &p in parts {
        for j in 1..=p {
            total += 1;
            acc = acc * total / j;
        }
    }
    acc
}

/// `n! / (α_1! α_2! ⋯)`.
pub fn multinomial(n: usize, alpha: &WeakComposition) -> Result<BigUint> {
    if alpha.n() != n {
        return Err(Error::SumMismatch {
            expected: n,
            found: alpha.n(),
        });
    }
    Ok(multinomial_of_parts(alpha.parts()))
}

/// Number of permutations of `[n]` with descent set exactly `S`, by
/// inclusion–exclusion over the subsets `T ⊆ S` of the counts of
/// permutations whose descent set is contained in `T`.
pub fn beta(set: &DescentSet) -> BigUint {
    let n = set.n();
    if n == 0 {
        return BigUint::one();
    }
    let members = set.members();
    let m = members.len();
    assert!(m < 64, "descent set too large for subset expansion");
    let mut total = BigInt::zero();
    let mut parts = Vec::with_capacity(m + 1);
    for mask in 0u64..1 << m {
        parts.clear();
        let mut prev = 0;
        for (j, &s) in members.iter().enumerate() {
            if mask >> j & 1 == 1 {
                parts.push(s - prev);
                prev = s;
            }
        }
        parts.push(n - prev);
        let term = BigInt::from(multinomial_of_parts(&parts));
        if (m - mask.count_ones() as usize).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    total.to_biguint().expect("descent counts are non-negative")
}

/// Exhaustive count of permutations of `[n]` with descent set `S`.
pub fn beta_bruteforce(set: &DescentSet, cap: Cap) -> Result<BigUint> {
    cap.check(set.n())?;
    let mut count = 0u64;
    for perm in Permutations::new(set.n()) {
        if descents(&perm) == set.members() {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Euler number `E_n` via the Seidel–Entringer boustrophedon.
pub fn euler_number(n: usize) -> BigUint {
    // row[k] = E(m, k), the Entringer numbers; E(m, m) = E_m.
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigUint::zero());
        for k in 1..=m {
            let v = &next[k - 1] + &row[m - k];
            next.push(v);
        }
        row = next;
    }
    row.pop().expect("non-empty row")
}

fn descents(perm: &[usize]) -> Vec<usize> {
    (1..perm.len()).filter(|&i| perm[i - 1] > perm[i]).collect()
}

/// Descent set `{ i : σ_i > σ_{i+1} }` of a permutation of `1..=n`.
pub fn descent_set(perm: &[usize]) -> Result<DescentSet> {
    let n = perm.len();
    let mut seen = vec![false; n + 1];
    for &v in perm {
        if v == 0 || v > n || seen[v] {
            return Err(Error::NotAPermutation(n));
        }
        seen[v] = true;
    }
    Ok(DescentSet {
        n,
        members: descents(perm),
    })
}

/// All permutations of `1..=n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: Some((1..=n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let mut nxt = cur.clone();
        if next_permutation(&mut nxt) {
            self.current = Some(nxt);
        }
        Some(cur)
    }
}

/// Advance to the next permutation in lexicographic order; `false` once
/// the sequence was the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Members of `Κ_γ` in lexicographically decreasing order.
///
/// Each emitted `α` has exactly `ℓ(γ)` parts, sums to `|γ|` and satisfies
/// `α_1 + … + α_i ≥ γ_1 + … + γ_i` for every `i`.
#[derive(Debug, Clone)]
pub struct KappaIter {
    bounds: Vec<usize>,
    total: usize,
    current: Option<Vec<usize>>,
}

impl KappaIter {
    fn new(gamma: &[usize]) -> Self {
        let mut bounds = Vec::with_capacity(gamma.len());
        let mut acc = 0;
        for &g in gamma {
            acc += g;
            bounds.push(acc);
        }
        let current = if gamma.is_empty() {
            None
        } else {
            let mut first = vec![0; gamma.len()];
            first[0] = acc;
            Some(first)
        };
        KappaIter {
            bounds,
            total: acc,
            current,
        }
    }

    // Rightmost position that can give one unit to the right while keeping
    // its prefix sum dominant; everything after it is refilled maximally.
    fn successor(&self, alpha: &[usize]) -> Option<Vec<usize>> {
        let k = alpha.len();
        let mut prefix: Vec<usize> = alpha
            .iter()
            .scan(0, |s, &a| {
                *s += a;
                Some(*s)
            })
            .collect();
        for i in (0..k.saturating_sub(1)).rev() {
            if alpha[i] > 0 && prefix[i] > self.bounds[i] {
                let mut next = alpha[..=i].to_vec();
                next[i] -= 1;
                prefix[i] -= 1;
                next.push(self.total - prefix[i]);
                next.resize(k, 0);
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for KappaIter {
    type Item = WeakComposition;

    fn next(&mut self) -> Option<WeakComposition> {
        let cur = self.current.take()?;
        self.current = self.successor(&cur);
        Some(WeakComposition { parts: cur })
    }
}

pub fn kappa_enumerate(gamma: &Composition) -> KappaIter {
    KappaIter::new(gamma.parts())
}

/// `Κ_γ` for a weak `γ`, as needed for bound vectors with skipped levels and
/// for the shifted compositions `(0, δ_i, …)` of the inner integrals.
pub fn kappa_enumerate_weak(gamma: &WeakComposition) -> KappaIter {
    KappaIter::new(gamma.parts())
}
