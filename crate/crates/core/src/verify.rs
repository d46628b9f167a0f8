//! Batch verification of the enumerative and volume identities.
//!
//! Each check is sized by `n_max` (clamped to its own natural range) and
//! produces a [`CheckOutcome`]. Checks run concurrently; outcomes are
//! returned in check order.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::combinatorics::{
    beta, comp_of_subset, euler_number, factorial, kappa_enumerate, AVector, Composition,
    DescentSet,
};
use crate::parking::{inversion_enumerator_via_parking, predicted_at_minus_one, sum_enumerator};
use crate::polynomials::{format_rational, var_list, MultiPoly, Rational};
use crate::polytope::{
    abs_sum_enumerator_at, linear_extensions_ribbon, pitman_stanley_integration_oracle,
    pitman_stanley_volume, simplex_power_integral, sum_enumerator_specialization, volume_formula,
    volume_integration_oracle, volume_parking_sum, volume_polynomial, ZPolytopeSpec,
};
use crate::strips::verify_involution_theorem;
use crate::trees::inversion_enumerator_via_trees;
use crate::{Cap, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// The volume polynomial `120 · Vol(Z_{4})` for `n = 5`.
pub const FIVE_FOUR_POLYNOMIAL: &str = "20 * d1 d2^3 d3 - 5 * d1 d2^4 - 30 * d1^2 d2^2 d3 \
     + 10 * d1^2 d2^3 + 20 * d1^3 d2 d3 - 10 * d1^3 d2^2 - 5 * d1^4 d3 + 5 * d1^4 d2 - d1^5";

/// `Κ_{(1,3,1)}`, listed in increasing lexicographic order.
pub const KAPPA_131: [[usize; 3]; 9] = [
    [1, 3, 1],
    [1, 4, 0],
    [2, 2, 1],
    [2, 3, 0],
    [3, 1, 1],
    [3, 2, 0],
    [4, 0, 1],
    [4, 1, 0],
    [5, 0, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(n_max: usize) -> Self {
        SuiteConfig {
            n_max,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

type CheckFn = fn(&SuiteConfig) -> Result<(bool, String)>;

pub const CHECKS: [(&str, CheckFn); 12] = [
    ("euler identity", check_euler),
    ("cayley count", check_cayley),
    ("tree/parking equidistribution", check_equidistribution),
    ("sum enumerator at -1", check_sum_enumerator),
    ("involution", check_involution),
    ("volume polynomial n=5 S={4}", check_paper_polynomial),
    ("three-way volume agreement", check_three_way),
    ("chain polytope specialization", check_chain_polytope),
    ("q-specialization", check_q_specialization),
    ("kappa (1,3,1)", check_kappa_example),
    ("pitman-stanley", check_pitman_stanley),
    ("simplex integral identity", check_simplex_integral),
];

/// Run one check by its 1-based id.
pub fn run_check(id: usize, config: &SuiteConfig) -> CheckOutcome {
    let (name, f) = CHECKS[id - 1];
    let start = Instant::now();
    let (passed, detail) = match f(config) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

/// Run every check up to `config.n_max`.
pub fn run_suite(config: &SuiteConfig, cap: Cap) -> Result<Vec<CheckOutcome>> {
    cap.check(config.n_max)?;
    Ok((1..=CHECKS.len())
        .into_par_iter()
        .map(|id| run_check(id, config))
        .collect())
}

/// A random non-decreasing vector of length `n` with entries in `1..=max`.
pub fn random_avector<R: Rng>(rng: &mut R, n: usize, max: u32) -> AVector {
    let mut e: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max)).collect();
    e.sort_unstable();
    AVector::new(e).expect("sorted positive entries")
}

fn random_fraction<R: Rng>(rng: &mut R, lo: i64) -> Rational {
    Rational::new(
        BigInt::from(rng.gen_range(lo..=9)),
        BigInt::from(rng.gen_range(1..=5)),
    )
}

/// A random non-decreasing vector of `k` positive rationals.
pub fn random_bounds<R: Rng>(rng: &mut R, k: usize) -> Vec<Rational> {
    let mut d = vec![random_fraction(rng, 1)];
    for _ in 1..k {
        let next = d.last().unwrap() + random_fraction(rng, 0);
        d.push(next);
    }
    d
}

/// `n` random positive rationals.
pub fn random_positive<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_fraction(rng, 1)).collect()
}

fn subsets_without_one(n_max: usize) -> impl Iterator<Item = DescentSet> {
    (1..=n_max).flat_map(DescentSet::all_without_one)
}

fn check_euler(c: &SuiteConfig) -> Result<(bool, String)> {
    let top = c.n_max.min(8);
    for n in 1..=top {
        let e = BigInt::from(euler_number(n));
        let trees = inversion_enumerator_via_trees(n, Cap(8))?.eval_at_minus_one();
        let parking = inversion_enumerator_via_parking(n, Cap(8))?.eval_at_minus_one();
        if trees != e || parking != e {
            return Ok((
                false,
                format!("n={n}: trees {trees}, parking {parking}, E_n {e}"),
            ));
        }
    }
    Ok((true, format!("I_n(-1) = E_n for n = 1..{top}")))
}

fn check_cayley(c: &SuiteConfig) -> Result<(bool, String)> {
    let top = c.n_max.min(8);
    for n in 1..=top {
        let expected = BigInt::from(n + 1).pow(n as u32 - 1);
        let got = inversion_enumerator_via_trees(n, Cap(8))?.eval_int(&BigInt::one());
        if got != expected {
            return Ok((false, format!("n={n}: I_n(1) = {got}, expected {expected}")));
        }
    }
    Ok((true, format!("I_n(1) = (n+1)^(n-1) for n = 1..{top}")))
}

fn check_equidistribution(c: &SuiteConfig) -> Result<(bool, String)> {
    let top = c.n_max.min(7);
    for n in 1..=top {
        let t = inversion_enumerator_via_trees(n, Cap(8))?;
        let p = inversion_enumerator_via_parking(n, Cap(8))?;
        if t != p {
            return Ok((false, format!("n={n}: trees {t} vs parking {p}")));
        }
    }
    Ok((true, format!("coefficient-wise equal for n = 1..{top}")))
}

fn check_sum_enumerator(c: &SuiteConfig) -> Result<(bool, String)> {
    let top = c.n_max.min(7);
    let mut rng = StdRng::seed_from_u64(c.seed);
    let samples = 100;
    for _ in 0..samples {
        let n = rng.gen_range(1..=top);
        let a = random_avector(&mut rng, n, n as u32);
        let got = sum_enumerator(&a, Cap(8))?.eval_at_minus_one();
        let want = predicted_at_minus_one(&a);
        if got != want {
            return Ok((
                false,
                format!("a={:?}: I(-1) = {got}, predicted {want}", a.entries()),
            ));
        }
    }
    Ok((true, format!("{samples} random vectors with n <= {top}")))
}

/// All non-decreasing vectors of length `n` with entries in `1..=max`.
pub fn all_avectors(n: usize, max: u32) -> Vec<AVector> {
    let mut out = Vec::new();
    let mut e = vec![1u32; n];
    loop {
        out.push(AVector::new(e.clone()).expect("non-decreasing"));
        let Some(i) = (0..n).rev().find(|&i| e[i] < max) else {
            return out;
        };
        let v = e[i] + 1;
        e[i..].iter_mut().for_each(|x| *x = v);
    }
}

fn check_involution(c: &SuiteConfig) -> Result<(bool, String)> {
    let mut bounds: Vec<AVector> = (1..=c.n_max.min(5))
        .flat_map(|n| all_avectors(n, 5))
        .collect();
    let exhaustive = bounds.len();
    if c.n_max >= 6 {
        let mut rng = StdRng::seed_from_u64(c.seed ^ 6);
        bounds.extend((0..50).map(|_| random_avector(&mut rng, 6, 6)));
    }
    let reports = bounds
        .par_iter()
        .map(|a| verify_involution_theorem(a, Cap::INVOLUTION))
        .collect::<Result<Vec<_>>>()?;
    let mut strips = 0;
    let mut fixed = 0;
    for r in &reports {
        strips += r.strips;
        fixed += r.fixed_points;
        if let Some(f) = r.failures.first() {
            let witness = f
                .witness
                .as_ref()
                .map(|w| format!("\n{}", w.render()))
                .unwrap_or_default();
            return Ok((
                false,
                format!(
                    "a={:?}: {:?}: {}{witness}",
                    r.bound.entries(),
                    f.kind,
                    f.detail
                ),
            ));
        }
    }
    Ok((
        true,
        format!(
            "{} vectors ({exhaustive} exhaustive), {strips} strips, {fixed} fixed points",
            reports.len()
        ),
    ))
}

fn check_paper_polynomial(_: &SuiteConfig) -> Result<(bool, String)> {
    let set = DescentSet::new(5, [4])?;
    let got = volume_polynomial(&set)?;
    let want = MultiPoly::parse(FIVE_FOUR_POLYNOMIAL, &var_list(&["d1", "d2", "d3"]))?;
    let ok = got == want && got.num_terms() == 9;
    Ok((ok, format!("{got}")))
}

fn check_three_way(c: &SuiteConfig) -> Result<(bool, String)> {
    let top = c.n_max.min(6);
    let sets: Vec<DescentSet> = subsets_without_one(top).collect();
    let results = sets
        .par_iter()
        .map(|set| -> Result<Option<String>> {
            let mut rng = StdRng::seed_from_u64(c.seed ^ (set.n() as u64) << 32 ^ mask_of(set));
            let k = comp_of_subset(set)?.len();
            let mut ds = vec![(1..=k)
                .map(|i| Rational::from_integer(i.into()))
                .collect::<Vec<_>>()];
            ds.extend((0..20).map(|_| random_bounds(&mut rng, k)));
            for d in ds {
                let spec = ZPolytopeSpec::new(set.clone(), d)?;
                let f = volume_formula(&spec)?;
                let p = volume_parking_sum(&spec, Cap(8))?;
                let i = volume_integration_oracle(&spec, Cap(8))?;
                if f != p || f != i {
                    return Ok(Some(format!(
                        "n={} S={set} d={:?}: {} / {} / {}",
                        set.n(),
                        spec.d().iter().map(format_rational).collect::<Vec<_>>(),
                        format_rational(&f),
                        format_rational(&p),
                        format_rational(&i)
                    )));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(msg) = results.into_iter().flatten().next() {
        return Ok((false, msg));
    }
    Ok((
        true,
        format!(
            "{} subsets with n <= {top}, 21 bound vectors each",
            sets.len()
        ),
    ))
}

fn mask_of(set: &DescentSet) -> u64 {
    set.members().iter().fold(0, |m, &i| m | 1 << i)
}

fn check_chain_polytope(c: &SuiteConfig) -> Result<(bool, String)> {
    let top = c.n_max.min(7);
    let mut count = 0;
    for n in 1..=top {
        for set in DescentSet::all(n) {
            let b = beta(&set);
            let ext = linear_extensions_ribbon(&set, Cap(8))?;
            if ext != b {
                return Ok((false, format!("n={n} S={set}: {ext} extensions, beta {b}")));
            }
            if !set.contains(1) {
                let k = comp_of_subset(&set)?.len();
                let spec = ZPolytopeSpec::new(set.clone(), vec![Rational::one(); k])?;
                let scaled = volume_formula(&spec)? * Rational::from_integer(factorial(n).into());
                if scaled != Rational::from_integer(b.clone().into()) {
                    return Ok((false, format!("n={n} S={set}: n! Vol = {scaled}, beta {b}")));
                }
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} subsets with n <= {top}")))
}

fn check_q_specialization(c: &SuiteConfig) -> Result<(bool, String)> {
    let top = c.n_max.min(6);
    let qs = [
        Rational::one(),
        Rational::from_integer(2.into()),
        Rational::new(3.into(), 2.into()),
    ];
    let mut count = 0;
    for set in subsets_without_one(top) {
        for q in &qs {
            let vol = sum_enumerator_specialization(&set, q)?;
            let en = abs_sum_enumerator_at(&set, q, Cap(8))?;
            if vol != en {
                return Ok((
                    false,
                    format!(
                        "S={set} q={}: {} vs {}",
                        format_rational(q),
                        format_rational(&vol),
                        format_rational(&en)
                    ),
                ));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} (S, q) pairs with n <= {top}")))
}

fn check_kappa_example(_: &SuiteConfig) -> Result<(bool, String)> {
    let got: Vec<Vec<usize>> = kappa_enumerate(&Composition::new(vec![1, 3, 1])?)
        .map(|a| a.parts().to_vec())
        .collect();
    // emitted in decreasing order
    let want: Vec<Vec<usize>> = KAPPA_131.iter().rev().map(|a| a.to_vec()).collect();
    Ok((got == want, format!("{} compositions", got.len())))
}

fn check_pitman_stanley(c: &SuiteConfig) -> Result<(bool, String)> {
    let top = c.n_max.min(5);
    let mut rng = StdRng::seed_from_u64(c.seed ^ 11);
    let mut count = 0;
    for n in 1..=top {
        for _ in 0..10 {
            let cs = random_positive(&mut rng, n);
            let formula = pitman_stanley_volume(&cs, Cap(8))?;
            let oracle = pitman_stanley_integration_oracle(&cs, Cap(8))?;
            if formula != oracle {
                return Ok((
                    false,
                    format!(
                        "c={:?}: {} vs {}",
                        cs.iter().map(format_rational).collect::<Vec<_>>(),
                        format_rational(&formula),
                        format_rational(&oracle)
                    ),
                ));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} random c vectors with n <= {top}")))
}

fn check_simplex_integral(_: &SuiteConfig) -> Result<(bool, String)> {
    let vars = var_list(&["a"]);
    for r in 0..=5usize {
        for s in 0..=5usize {
            let got = simplex_power_integral(r, s as u32)?;
            let c = Rational::new(factorial(s).into(), factorial(r + s).into());
            let want = MultiPoly::monomial(&vars, vec![(r + s) as u32], c);
            if got != want {
                return Ok((false, format!("r={r} s={s}: {got}")));
            }
        }
    }
    Ok((true, "0 <= r, s <= 5".into()))
}

pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}
