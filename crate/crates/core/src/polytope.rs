//! Generalized chain polytopes of ribbon posets.
//!
//! For `S ⊆ {2, …, n−1}` with `comp(S) = (1, δ_1, …, δ_{k−1})` and
//! `0 < d_1 ≤ … ≤ d_k`, the polytope `Z_S(d)` is cut out by `x ≥ 0`,
//! `x_1 ≤ d_1` and one window inequality per `i ∈ [k−1]`:
//! `x_{ρ_i} + … + x_{ρ_{i+1}} ≤ d_{i+1}` where `ρ_i = 1 + δ_1 + … + δ_{i−1}`.
//! Consecutive windows share one coordinate.
//!
//! Its volume is computed three ways which must agree exactly: a signed
//! sum over `Κ_{comp(S)}`, a signed sum over `ā(comp(S))`-parking
//! functions, and symbolic iterated integration.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    a_of_composition, comp_of_subset, factorial, kappa_enumerate, kappa_enumerate_weak,
    multinomial_of_parts, Composition, DescentSet, WeakComposition,
};
use crate::parking::{parking_sequences, sum_enumerator};
use crate::polynomials::{format_rational, MultiPoly, Rational};
use crate::{Cap, Error, Result};

/// `Z_S(d_1, …, d_k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZPolytopeSpec {
    set: DescentSet,
    composition: Composition,
    d: Vec<Rational>,
}

impl ZPolytopeSpec {
    pub fn new(set: DescentSet, d: Vec<Rational>) -> Result<Self> {
        let composition = comp_of_subset(&set)?;
        if d.len() != composition.len() {
            return Err(Error::LengthMismatch {
                expected: composition.len(),
                found: d.len(),
            });
        }
        if !d[0].is_positive() {
            return Err(Error::InvalidBounds("d_1 must be positive".into()));
        }
        if let Some(i) = (1..d.len()).find(|&i| d[i] < d[i - 1]) {
            return Err(Error::InvalidBounds(format!(
                "d_{} = {} is smaller than d_{} = {}",
                i + 1,
                format_rational(&d[i]),
                i,
                format_rational(&d[i - 1])
            )));
        }
        Ok(ZPolytopeSpec {
            set,
            composition,
            d,
        })
    }

    /// `Z_S(1, 2, …, k)`.
    pub fn with_increasing_bounds(set: DescentSet) -> Result<Self> {
        let k = comp_of_subset(&set)?.len();
        Self::new(
            set,
            (1..=k).map(|i| Rational::from_integer(i.into())).collect(),
        )
    }

    /// `Z_S(1, q, q², …)`.
    pub fn geometric(set: DescentSet, q: &Rational) -> Result<Self> {
        if q < &Rational::one() {
            return Err(Error::InvalidBounds("q must be at least 1".into()));
        }
        let k = comp_of_subset(&set)?.len();
        let d = (0..k).map(|i| num_traits::pow(q.clone(), i)).collect();
        Self::new(set, d)
    }

    pub fn n(&self) -> usize {
        self.set.n()
    }

    pub fn set(&self) -> &DescentSet {
        &self.set
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn k(&self) -> usize {
        self.composition.len()
    }

    pub fn d(&self) -> &[Rational] {
        &self.d
    }

    fn d_values(&self) -> HashMap<String, Rational> {
        d_vars(self.k())
            .into_iter()
            .zip(self.d.iter().cloned())
            .collect()
    }
}

/// `(δ_1, …, δ_{k−1})` and `ρ_1, …, ρ_k` (1-based positions).
fn deltas_and_rhos(comp: &Composition) -> (Vec<usize>, Vec<usize>) {
    let deltas = comp.parts()[1..].to_vec();
    let mut rhos = Vec::with_capacity(deltas.len() + 1);
    let mut rho = 1;
    rhos.push(rho);
    for &delta in &deltas {
        rho += delta;
        rhos.push(rho);
    }
    (deltas, rhos)
}

fn d_vars(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("d{i}")).collect()
}

fn x_var(j: usize) -> String {
    format!("x{j}")
}

/// `(−1)^{1 + δ_2 + δ_4 + …}` as a boolean "negative".
fn global_sign_negative(deltas: &[usize]) -> bool {
    let exponent: usize = 1 + deltas.iter().skip(1).step_by(2).sum::<usize>();
    exponent % 2 == 1
}

fn odd_position_sum(parts: &[usize]) -> usize {
    parts.iter().step_by(2).sum()
}

/// The poset on `z_1, …, z_n` with `z_i > z_{i+1}` for `i ∈ S` and
/// `z_i < z_{i+1}` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonPoset {
    set: DescentSet,
}

impl RibbonPoset {
    pub fn new(set: DescentSet) -> Self {
        RibbonPoset { set }
    }

    pub fn n(&self) -> usize {
        self.set.n()
    }

    /// Cover relations as `(lower, upper)` pairs of 1-based element indices.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (1..self.n())
            .map(|i| {
                if self.set.contains(i) {
                    (i + 1, i)
                } else {
                    (i, i + 1)
                }
            })
            .collect()
    }

    /// Number of linear extensions, by dynamic programming over order ideals.
    pub fn linear_extensions(&self, cap: Cap) -> Result<BigUint> {
        let n = self.n();
        cap.check(n)?;
        let mut below = vec![0u64; n];
        for (lo, hi) in self.covers() {
            below[hi - 1] |= 1 << (lo - 1);
        }
        let full = (1u64 << n) - 1;
        let mut ways = vec![BigUint::zero(); 1 << n];
        ways[0] = BigUint::one();
        for mask in 0..=full {
            if ways[mask as usize].is_zero() {
                continue;
            }
            let here = ways[mask as usize].clone();
            for (e, &need) in below.iter().enumerate() {
                let bit = 1u64 << e;
                if mask & bit == 0 && need & !mask == 0 {
                    ways[(mask | bit) as usize] += &here;
                }
            }
        }
        Ok(ways[full as usize].clone())
    }
}

pub fn linear_extensions_ribbon(set: &DescentSet, cap: Cap) -> Result<BigUint> {
    RibbonPoset::new(set.clone()).linear_extensions(cap)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintBound {
    Zero,
    /// `d_i`, 1-based.
    D(usize),
}

/// `Σ_j coefficients[j] · x_{j+1} ≤ bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coefficients: Vec<i64>,
    pub bound: ConstraintBound,
}

impl LinearConstraint {
    pub fn holds(&self, x: &[Rational], d: &[Rational]) -> bool {
        let lhs: Rational = self
            .coefficients
            .iter()
            .zip(x)
            .map(|(&c, v)| Rational::from_integer(c.into()) * v)
            .sum();
        let rhs = match self.bound {
            ConstraintBound::Zero => Rational::zero(),
            ConstraintBound::D(i) => d[i - 1].clone(),
        };
        lhs <= rhs
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "x{}", j + 1)?;
        }
        match self.bound {
            ConstraintBound::Zero => f.write_str(" <= 0"),
            ConstraintBound::D(i) => write!(f, " <= d{i}"),
        }
    }
}

/// Non-negativity, `x_1 ≤ d_1`, then the `k − 1` window constraints.
pub fn defining_inequalities(spec: &ZPolytopeSpec) -> Vec<LinearConstraint> {
    let n = spec.n();
    let (_, rhos) = deltas_and_rhos(spec.composition());
    let mut out = Vec::with_capacity(n + rhos.len());
    for j in 0..n {
        let mut c = vec![0; n];
        c[j] = -1;
        out.push(LinearConstraint {
            coefficients: c,
            bound: ConstraintBound::Zero,
        });
    }
    let mut c = vec![0; n];
    c[0] = 1;
    out.push(LinearConstraint {
        coefficients: c,
        bound: ConstraintBound::D(1),
    });
    for i in 1..rhos.len() {
        let mut c = vec![0; n];
        for slot in &mut c[rhos[i - 1] - 1..rhos[i]] {
            *slot = 1;
        }
        out.push(LinearConstraint {
            coefficients: c,
            bound: ConstraintBound::D(i + 1),
        });
    }
    out
}

/// `n! · Vol(Z_S)` as a polynomial in `d_1, …, d_k`:
/// `(−1)^{1+δ_2+δ_4+…} Σ_{α ∈ Κ_{comp(S)}} (n choose α) (−1)^{α_1+α_3+…} d^α`.
pub fn volume_polynomial(set: &DescentSet) -> Result<MultiPoly> {
    let comp = comp_of_subset(set)?;
    let (deltas, _) = deltas_and_rhos(&comp);
    let vars = d_vars(comp.len());
    let negate = global_sign_negative(&deltas);
    let mut poly = MultiPoly::zero(&vars);
    for alpha in kappa_enumerate(&comp) {
        let mut c = BigInt::from(multinomial_of_parts(alpha.parts()));
        if (odd_position_sum(alpha.parts()) % 2 == 1) != negate {
            c = -c;
        }
        let exps = alpha.parts().iter().map(|&a| a as u32).collect();
        let term = MultiPoly::monomial(&vars, exps, Rational::from_integer(c));
        poly = &poly + &term;
    }
    Ok(poly)
}

fn n_factorial(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(factorial(n)))
}

fn require_positive(v: Rational, route: &str) -> Result<Rational> {
    if v.is_positive() {
        Ok(v)
    } else {
        Err(Error::NonPositiveVolume(format!(
            "{route}: {}",
            format_rational(&v)
        )))
    }
}

/// Volume from the signed sum over `Κ_{comp(S)}`.
pub fn volume_formula(spec: &ZPolytopeSpec) -> Result<Rational> {
    let poly = volume_polynomial(spec.set())?;
    let v = poly.evaluate(&spec.d_values())? / n_factorial(spec.n());
    require_positive(v, "signed multinomial sum")
}

/// Volume from `(−1)^{1+δ_2+…} Σ_{b ∈ P_{ā(comp(S))}} Π_i (−1)^{b_i} d_{b_i}`.
pub fn volume_parking_sum(spec: &ZPolytopeSpec, cap: Cap) -> Result<Rational> {
    let a = a_of_composition(spec.composition());
    let (deltas, _) = deltas_and_rhos(spec.composition());
    let signed_d: Vec<Rational> = spec
        .d()
        .iter()
        .enumerate()
        .map(|(i, d)| if i % 2 == 0 { -d.clone() } else { d.clone() })
        .collect();
    let mut seq = parking_sequences(&a, cap)?;
    let mut total = Rational::zero();
    while let Some(b) = seq.next_slice() {
        let term = b
            .iter()
            .fold(Rational::one(), |acc, &v| acc * &signed_d[v as usize - 1]);
        total += term;
    }
    if global_sign_negative(&deltas) {
        total = -total;
    }
    require_positive(total / n_factorial(spec.n()), "parking function sum")
}

/// Intermediate results of the iterated integral, integrating
/// `x_n, x_{n−1}, …, x_1` in that order.
#[derive(Debug, Clone)]
pub struct IntegrationTrace {
    /// `partials[i-1] = J_{ρ_i + 1}` over `[x_{ρ_i}, d_{i+1}, …, d_k]`.
    pub partials: Vec<MultiPoly>,
    /// `Vol(Z_S)` as a polynomial in `d_1, …, d_k`.
    pub volume: MultiPoly,
}

/// Evaluate the iterated integral symbolically. The upper limit for `x_j`
/// with `ρ_i < j ≤ ρ_{i+1}` is `d_{i+1} − x_{ρ_i} − … − x_{j−1}`, and `x_1`
/// runs up to `d_1`.
pub fn integrate_volume(set: &DescentSet, cap: Cap) -> Result<IntegrationTrace> {
    let n = set.n();
    cap.check(n)?;
    let comp = comp_of_subset(set)?;
    let k = comp.len();
    let (_, rhos) = deltas_and_rhos(&comp);

    let mut vars: Vec<String> = (1..=n).map(x_var).collect();
    vars.extend(d_vars(k));
    let mut j_poly = MultiPoly::one(&vars);
    let mut partials: Vec<Option<MultiPoly>> = vec![None; k];
    partials[k - 1] = Some(j_poly.restrict_to(&partial_vars(&rhos, k, k))?);

    for j in (1..=n).rev() {
        let upper = if j == 1 {
            MultiPoly::var(&vars, "d1")?
        } else {
            // window i (1-based) with ρ_i < j ≤ ρ_{i+1}
            let i = (1..k)
                .find(|&i| rhos[i - 1] < j && j <= rhos[i])
                .expect("j lies in a window");
            let mut u = MultiPoly::var(&vars, &format!("d{}", i + 1))?;
            for m in rhos[i - 1]..j {
                u = &u - &MultiPoly::var(&vars, &x_var(m))?;
            }
            u
        };
        let name = x_var(j);
        j_poly = j_poly
            .integrate_definite(&name, &upper)?
            .drop_variable(&name)?;
        vars.retain(|v| *v != name);
        if let Some(i) = (1..k).find(|&i| rhos[i - 1] + 1 == j) {
            partials[i - 1] = Some(j_poly.restrict_to(&partial_vars(&rhos, k, i))?);
        }
    }
    Ok(IntegrationTrace {
        partials: partials
            .into_iter()
            .map(|p| p.expect("every window visited"))
            .collect(),
        volume: j_poly.restrict_to(&d_vars(k))?,
    })
}

fn partial_vars(rhos: &[usize], k: usize, i: usize) -> Vec<String> {
    let mut v = vec![x_var(rhos[i - 1])];
    v.extend((i + 1..=k).map(|m| format!("d{m}")));
    v
}

/// Volume from the iterated integral, evaluated at the spec's `d`.
///
/// Each window's first upper limit `d_{i+1} − x_{ρ_i}` is checked to stay
/// non-negative given `x_{ρ_i} ≤ d_i`.
pub fn volume_integration_oracle(spec: &ZPolytopeSpec, cap: Cap) -> Result<Rational> {
    let (_, rhos) = deltas_and_rhos(spec.composition());
    for i in 1..spec.k() {
        if spec.d()[i] < spec.d()[i - 1] {
            return Err(Error::NegativeIntegrationBound {
                variable: rhos[i - 1] + 1,
            });
        }
    }
    let trace = integrate_volume(spec.set(), cap)?;
    let v = trace.volume.evaluate(&spec.d_values())?;
    require_positive(v, "iterated integral")
}

/// `J_{ρ_i + 1}` from the integration pipeline (`i` is 1-based).
pub fn j_partial(set: &DescentSet, i: usize, cap: Cap) -> Result<MultiPoly> {
    let trace = integrate_volume(set, cap)?;
    let k = trace.partials.len();
    if i == 0 || i > k {
        return Err(Error::LengthMismatch {
            expected: k,
            found: i,
        });
    }
    Ok(trace.partials[i - 1].clone())
}

/// Closed form of `J_{ρ_i + 1}`:
/// `(−1)^{δ_{i+1}+δ_{i+3}+…} Σ_{α ∈ Κ_{(0, δ_i, …, δ_{k−1})}} (−1)^{α_1+α_3+…}
/// x_{ρ_i}^{α_1} d_{i+1}^{α_2} ⋯ / (α_1! α_2! ⋯)`.
pub fn j_partial_closed_form(set: &DescentSet, i: usize) -> Result<MultiPoly> {
    let comp = comp_of_subset(set)?;
    let k = comp.len();
    if i == 0 || i > k {
        return Err(Error::LengthMismatch {
            expected: k,
            found: i,
        });
    }
    let (deltas, rhos) = deltas_and_rhos(&comp);
    let vars = partial_vars(&rhos, k, i);
    let mut gamma = vec![0usize];
    gamma.extend_from_slice(&deltas[i - 1..]);
    // δ_{i+1}, δ_{i+3}, … are deltas[i], deltas[i+2], … (0-based)
    let sign_exp: usize = deltas.iter().skip(i).step_by(2).sum();
    let mut poly = MultiPoly::zero(&vars);
    for alpha in kappa_enumerate_weak(&WeakComposition::new(gamma)) {
        let denom: BigUint = alpha.parts().iter().map(|&a| factorial(a)).product();
        let mut c = Rational::new(BigInt::one(), BigInt::from(denom));
        if (sign_exp + odd_position_sum(alpha.parts())) % 2 == 1 {
            c = -c;
        }
        let exps = alpha.parts().iter().map(|&a| a as u32).collect();
        poly = &poly + &MultiPoly::monomial(&vars, exps, c);
    }
    Ok(poly)
}

/// `n! · Vol(Z_S(1, q, q², …))` via the signed multinomial sum.
pub fn sum_enumerator_specialization(set: &DescentSet, q: &Rational) -> Result<Rational> {
    let spec = ZPolytopeSpec::geometric(set.clone(), q)?;
    Ok(volume_formula(&spec)? * n_factorial(set.n()))
}

/// `|I_{ā(comp(S))}(−q)|` straight from the sum enumerator.
pub fn abs_sum_enumerator_at(set: &DescentSet, q: &Rational, cap: Cap) -> Result<Rational> {
    let a = a_of_composition(&comp_of_subset(set)?);
    Ok(sum_enumerator(&a, cap)?.eval(&-q.clone()).abs())
}

fn check_pitman_stanley(c: &[Rational]) -> Result<()> {
    if c.is_empty() {
        return Err(Error::LengthMismatch {
            expected: 1,
            found: 0,
        });
    }
    if c.iter().any(|v| !v.is_positive()) {
        return Err(Error::InvalidBounds("c entries must be positive".into()));
    }
    Ok(())
}

/// `Vol(Π_n(c)) = (1/n!) Σ_{b ∈ P_n} Π_i c_{b_i}`.
pub fn pitman_stanley_volume(c: &[Rational], cap: Cap) -> Result<Rational> {
    check_pitman_stanley(c)?;
    let n = c.len();
    let a = crate::combinatorics::AVector::classical(n);
    let mut seq = parking_sequences(&a, cap)?;
    let mut total = Rational::zero();
    while let Some(b) = seq.next_slice() {
        total += b
            .iter()
            .fold(Rational::one(), |acc, &v| acc * &c[v as usize - 1]);
    }
    Ok(total / n_factorial(n))
}

/// Volume of `{x ≥ 0, x_1 + … + x_i ≤ c_1 + … + c_i}` by iterated
/// integration, innermost variable `x_n`.
pub fn pitman_stanley_integration_oracle(c: &[Rational], cap: Cap) -> Result<Rational> {
    check_pitman_stanley(c)?;
    let n = c.len();
    cap.check(n)?;
    let mut vars: Vec<String> = (1..=n).map(x_var).collect();
    let mut j_poly = MultiPoly::one(&vars);
    let mut prefix: Vec<Rational> = Vec::with_capacity(n);
    let mut acc = Rational::zero();
    for v in c {
        acc += v;
        prefix.push(acc.clone());
    }
    for j in (1..=n).rev() {
        let mut upper = MultiPoly::constant(&vars, prefix[j - 1].clone());
        for m in 1..j {
            upper = &upper - &MultiPoly::var(&vars, &x_var(m))?;
        }
        let name = x_var(j);
        j_poly = j_poly
            .integrate_definite(&name, &upper)?
            .drop_variable(&name)?;
        vars.retain(|v| *v != name);
    }
    Ok(j_poly.as_constant().expect("all variables integrated"))
}

/// `∫_0^a ∫_0^{a−y_r} ⋯ ∫_0^{a−y_r−⋯−y_2} y_1^s dy_1 ⋯ dy_r` as a polynomial
/// in `a`. With `r = 0` nothing is integrated and `y_1` sits at its bound `a`.
pub fn simplex_power_integral(r: usize, s: u32) -> Result<MultiPoly> {
    let mut vars = vec!["a".to_string()];
    vars.extend((1..=r).map(|j| format!("y{j}")));
    let a = MultiPoly::var(&vars, "a")?;
    if r == 0 {
        return Ok(a.pow(s));
    }
    let mut poly = MultiPoly::var(&vars, "y1")?.pow(s);
    for j in 1..=r {
        let mut upper = a.clone();
        for m in j + 1..=r {
            upper = &upper - &MultiPoly::var(&vars, &format!("y{m}"))?;
        }
        let name = format!("y{j}");
        poly = poly.integrate_definite(&name, &upper)?;
    }
    poly.restrict_to(&["a".to_string()])
}

/// JSON form of a volume query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VolumeJson {
    pub n: usize,
    #[serde(rename = "S")]
    pub set: Vec<usize>,
    pub d: Vec<String>,
    pub volume: String,
    pub n_factorial_volume_polynomial: String,
}

impl VolumeJson {
    pub fn from_spec(spec: &ZPolytopeSpec) -> Result<Self> {
        Ok(VolumeJson {
            n: spec.n(),
            set: spec.set().members().to_vec(),
            d: spec.d().iter().map(format_rational).collect(),
            volume: format_rational(&volume_formula(spec)?),
            n_factorial_volume_polynomial: volume_polynomial(spec.set())?.to_string(),
        })
    }
}
