//! Exact polynomials.
//!
//! [`UniPoly`] is a dense univariate polynomial over big integers, used for
//! the enumerators `I_n(q)` and `I_ā(q)`. [`MultiPoly`] is a sparse
//! multivariate polynomial over big rationals on a named, ordered variable
//! list; it supports definite integration with a polynomial upper limit,
//! which is all the iterated volume integrals need.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

/// Parse `"p/q"` or an integer into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => text
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
    }
}

/// `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `q^i`.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        UniPoly::new(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// `q^d · p(1/q)`. Panics if `d` is below the degree.
    pub fn reversed(&self, d: usize) -> UniPoly {
        if let Some(deg) = self.degree() {
            assert!(
                deg <= d,
                "reversal degree {d} below polynomial degree {deg}"
            );
        }
        let coeffs = (0..=d).map(|i| self.coeff(d - i)).collect();
        UniPoly::new(coeffs)
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * q + Rational::from_integer(c.clone())
        })
    }

    pub fn eval_int(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Exact value at `q = -1`.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .fold(
                BigInt::zero(),
                |acc, (i, c)| if i % 2 == 0 { acc + c } else { acc - c },
            )
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("q")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sparse polynomial over `Q` in an ordered list of named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &[String]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[String]) -> Self {
        MultiPoly::constant(vars, Rational::one())
    }

    pub fn var(vars: &[String], name: &str) -> Result<Self> {
        let idx = index_of(vars, name)?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(MultiPoly::monomial(vars, exps, Rational::one()))
    }

    pub fn monomial(vars: &[String], exponents: Vec<u32>, coeff: Rational) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent vector length");
        let mut p = MultiPoly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of the monomial with the given exponents.
    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(e, _)| e.iter().all(|&x| x == 0))
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn degree_in(&self, name: &str) -> Result<u32> {
        let idx = index_of(&self.vars, name)?;
        Ok(self.terms.keys().map(|e| e[idx]).max().unwrap_or(0))
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars {
            Err(Error::VariableMismatch)
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∫_0^{upper} p d(var)`: the antiderivative in `var` evaluated at
    /// `var := upper` (its value at 0 vanishes). `var` is left in the
    /// variable list with exponent zero everywhere.
    pub fn integrate_definite(&self, var: &str, upper: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(upper)?;
        let idx = index_of(&self.vars, var)?;
        if upper.terms.keys().any(|e| e[idx] != 0) {
            return Err(Error::VariableInUpperLimit(var.to_string()));
        }
        // Group by the exponent of `var` so each power of `upper` is built once.
        let mut by_power: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[idx];
            let mut rest = e.clone();
            rest[idx] = 0;
            by_power
                .entry(k)
                .or_insert_with(|| MultiPoly::zero(&self.vars))
                .add_term(rest, c / Rational::from_integer(BigInt::from(k + 1)));
        }
        let mut out = MultiPoly::zero(&self.vars);
        let mut power = upper.clone();
        let mut at = 1;
        for (k, coeff) in by_power {
            while at < k + 1 {
                power = &power * upper;
                at += 1;
            }
            for (e, c) in (&coeff * &power).terms {
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    /// Substitute exact values for some variables. Substituted variables are
    /// removed from the variable list of the result.
    pub fn substitute(&self, values: &HashMap<String, Rational>) -> Result<MultiPoly> {
        for name in values.keys() {
            index_of(&self.vars, name)?;
        }
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| !values.contains_key(&self.vars[i]))
            .collect();
        let new_vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let mut out = MultiPoly::zero(&new_vars);
        let mut pow_cache: HashMap<(usize, u32), Rational> = HashMap::new();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if let Some(v) = values.get(&self.vars[i]) {
                    let p = pow_cache
                        .entry((i, k))
                        .or_insert_with(|| num_traits::pow(v.clone(), k as usize));
                    coeff *= &*p;
                }
            }
            out.add_term(keep.iter().map(|&i| e[i]).collect(), coeff);
        }
        Ok(out)
    }

    /// Full evaluation; every variable must be assigned.
    pub fn evaluate(&self, values: &HashMap<String, Rational>) -> Result<Rational> {
        let p = self.substitute(values)?;
        if let Some(missing) = p.vars.first() {
            return Err(Error::UnknownVariable(missing.clone()));
        }
        Ok(p.as_constant().expect("no variables left"))
    }

    /// Remove a variable that no longer occurs.
    pub fn drop_variable(&self, name: &str) -> Result<MultiPoly> {
        let idx = index_of(&self.vars, name)?;
        if self.terms.keys().any(|e| e[idx] != 0) {
            return Err(Error::VariableStillPresent(name.to_string()));
        }
        let mut vars = self.vars.clone();
        vars.remove(idx);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.remove(idx);
                (e, c.clone())
            })
            .collect();
        Ok(MultiPoly { vars, terms })
    }

    /// Re-express over `vars`, which must contain every variable that
    /// actually occurs.
    pub fn restrict_to(&self, vars: &[String]) -> Result<MultiPoly> {
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None => {
                    if self.terms.keys().any(|e| e[i] != 0) {
                        return Err(Error::VariableStillPresent(v.clone()));
                    }
                    map.push(None);
                }
            }
        }
        let mut out = MultiPoly::zero(vars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    ne[j] = k;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Parse the canonical text form produced by `Display` (the terms may
    /// come in any order, and `*` between factors is optional).
    pub fn parse(text: &str, vars: &[String]) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(vars);
        let text = text.trim();
        if text == "0" {
            return Ok(out);
        }
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut neg = false;
        let mut cur = String::new();
        let mut prev_sig: Option<char> = None;
        for ch in text.chars() {
            // A sign directly after '^' or '/' belongs to a number, otherwise
            // it separates terms.
            if (ch == '+' || ch == '-') && !matches!(prev_sig, Some('^') | Some('/')) {
                if !cur.trim().is_empty() {
                    chunks.push((neg, std::mem::take(&mut cur)));
                    neg = ch == '-';
                } else {
                    neg ^= ch == '-';
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev_sig = Some(ch);
            }
        }
        if !cur.trim().is_empty() {
            chunks.push((neg, cur));
        }
        for (neg, chunk) in chunks {
            let mut coeff = Rational::one();
            let mut exps = vec![0u32; vars.len()];
            for factor in chunk.split(|c: char| c == '*' || c.is_whitespace()) {
                if factor.is_empty() {
                    continue;
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= parse_rational(factor)?;
                } else {
                    let (name, e) = match factor.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                        ),
                        None => (factor, 1),
                    };
                    exps[index_of(vars, name)?] += e;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }
}

fn index_of(vars: &[String], name: &str) -> Result<usize> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| Error::UnknownVariable(name.to_string()))
}

/// Build a variable list from string slices.
pub fn var_list<S: AsRef<str>>(names: &[S]) -> Vec<String> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

impl<'a> Add for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("variable lists differ")
    }
}

impl<'a> Sub for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("variable lists differ")
    }
}

impl<'a> Mul for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("variable lists differ")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

/// Canonical text: terms in descending lexicographic order of exponent
/// vectors, each written `coeff * x1^e1 x2^e2`; exponent 1 is omitted and a
/// constant term is the bare coefficient.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            f.write_str(&format_rational(&mag))?;
            let mut sep = " * ";
            for (name, &k) in self.vars.iter().zip(e) {
                if k == 0 {
                    continue;
                }
                f.write_str(sep)?;
                sep = " ";
                f.write_str(name)?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, r: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(r))
    }

    fn vars(names: &[&str]) -> Vec<String> {
        var_list(names)
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), q(1, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), q(-7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&q(4, 2)), "2");
        assert_eq!(format_rational(&q(-1, 3)), "-1/3");
    }

    #[test]
    fn unipoly_display_and_eval() {
        let p = UniPoly::from_counts(&[1, 2]);
        assert_eq!(p.to_string(), "1 + 2q");
        assert_eq!(p.reversed(1).to_string(), "2 + q");
        assert_eq!(
            UniPoly::from_counts(&[1, 2, 1]).eval_at_minus_one(),
            BigInt::zero()
        );
        assert_eq!(UniPoly::zero().eval_at_minus_one(), BigInt::zero());
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(
            UniPoly::new(vec![BigInt::from(-1), BigInt::from(-3)]).to_string(),
            "-1 - 3q"
        );
        assert_eq!(p.eval(&q(-2, 1)), q(-3, 1));
        assert_eq!(UniPoly::from_counts(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn ring_examples() {
        let v = vars(&["x1", "d2"]);
        let x = MultiPoly::var(&v, "x1").unwrap();
        let d = MultiPoly::var(&v, "d2").unwrap();
        let zero = MultiPoly::zero(&v);
        assert_eq!(&x + &zero, x);
        assert_eq!((&x * &x).to_string(), "1 * x1^2");
        let w = &d - &x;
        let sq = &w * &w;
        let want = MultiPoly::parse("d2^2 - 2 * x1 d2 + x1^2", &v).unwrap();
        assert_eq!(sq, want);
        let other = MultiPoly::zero(&vars(&["y"]));
        assert_eq!(x.try_add(&other), Err(Error::VariableMismatch));
    }

    #[test]
    fn power_rule() {
        let v = vars(&["y", "a"]);
        let y = MultiPoly::var(&v, "y").unwrap();
        let a = MultiPoly::var(&v, "a").unwrap();
        for s in 0..6u32 {
            let got = y.pow(s).integrate_definite("y", &a).unwrap();
            let want = MultiPoly::monomial(&v, vec![0, s + 1], q(1, s as i64 + 1));
            assert_eq!(got, want);
        }
    }

    #[test]
    fn integrate_rejects_var_in_upper() {
        let v = vars(&["y", "a"]);
        let y = MultiPoly::var(&v, "y").unwrap();
        assert_eq!(
            y.integrate_definite("y", &y),
            Err(Error::VariableInUpperLimit("y".into()))
        );
    }

    #[test]
    fn integrate_constant_to_window() {
        let v = vars(&["x1", "x2", "d2"]);
        let upper = &MultiPoly::var(&v, "d2").unwrap() - &MultiPoly::var(&v, "x1").unwrap();
        let got = MultiPoly::one(&v).integrate_definite("x2", &upper).unwrap();
        assert_eq!(got, upper);
    }

    #[test]
    fn substitution() {
        let v = vars(&["d1", "d2"]);
        let p = MultiPoly::parse("2 * d1 d2 - d1^2", &v).unwrap();
        let vals: HashMap<String, Rational> =
            [("d1".to_string(), q(1, 1)), ("d2".to_string(), q(1, 1))].into();
        assert_eq!(p.evaluate(&vals).unwrap(), q(1, 1));
        assert_eq!(p.substitute(&HashMap::new()).unwrap(), p);
        let part: HashMap<String, Rational> = [("d2".to_string(), q(3, 1))].into();
        let s = p.substitute(&part).unwrap();
        assert_eq!(s.vars(), &["d1".to_string()]);
        assert_eq!(s.to_string(), "-1 * d1^2 + 6 * d1");
    }

    #[test]
    fn drop_and_restrict() {
        let v = vars(&["x1", "x2", "d1"]);
        let p = MultiPoly::parse("3/2 * x1 d1 + 1", &v).unwrap();
        let dropped = p.drop_variable("x2").unwrap();
        assert_eq!(dropped.vars(), &vars(&["x1", "d1"]));
        assert_eq!(
            p.drop_variable("x1"),
            Err(Error::VariableStillPresent("x1".into()))
        );
        let r = p.restrict_to(&vars(&["d1", "x1"])).unwrap();
        assert_eq!(r.coeff(&[1, 1]), q(3, 2));
        assert!(p.restrict_to(&vars(&["d1"])).is_err());
    }

    #[test]
    fn display_parse_round_trip_fixed() {
        let v = vars(&["d1", "d2", "d3"]);
        let text = "20 * d1 d2^3 d3 - 5 * d1 d2^4 - 1/3 * d1^5 + 7";
        let p = MultiPoly::parse(text, &v).unwrap();
        assert_eq!(MultiPoly::parse(&p.to_string(), &v).unwrap(), p);
        assert_eq!(
            p.to_string(),
            "-1/3 * d1^5 - 5 * d1 d2^4 + 20 * d1 d2^3 d3 + 7"
        );
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6, 1i64..4), 0..5).prop_map(
            |terms| {
                let v = var_list(&["x", "y", "z"]);
                let mut p = MultiPoly::zero(&v);
                for ((a, b, c), n, d) in terms {
                    p.add_term(vec![a, b, c], q(n, d));
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            let v = var_list(&["x", "y", "z"]);
            prop_assert_eq!(MultiPoly::parse(&a.to_string(), &v).unwrap(), a);
        }

        #[test]
        fn integration_is_linear(a in arb_poly(), b in arb_poly()) {
            let v = var_list(&["x", "y", "z"]);
            let upper = &MultiPoly::var(&v, "y").unwrap() + &MultiPoly::constant(&v, q(2, 1));
            let lhs = (&a + &b).integrate_definite("x", &upper).unwrap();
            let rhs = &a.integrate_definite("x", &upper).unwrap() + &b.integrate_definite("x", &upper).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
