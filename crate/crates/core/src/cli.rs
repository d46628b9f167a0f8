//! Command-line front end. Every command renders into a [`Report`] so the
//! binary only prints and picks an exit code.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::json;

use crate::combinatorics::{
    beta, beta_bruteforce, comp_of_subset, euler_number, factorial, kappa_enumerate_weak,
    multinomial_of_parts, subset_of_avector, AVector, DescentSet, WeakComposition,
};
use crate::parking::{
    count_a_parking, inversion_enumerator_via_parking, predicted_at_minus_one, sum_enumerator,
};
use crate::polynomials::{format_rational, parse_rational, Rational};
use crate::polytope::{
    abs_sum_enumerator_at, linear_extensions_ribbon, pitman_stanley_integration_oracle,
    pitman_stanley_volume, volume_formula, volume_integration_oracle, volume_parking_sum,
    volume_polynomial, VolumeJson, ZPolytopeSpec,
};
use crate::strips::{all_strips, parking_of_strip, verify_involution_theorem, FilledStrip};
use crate::trees::inversion_enumerator_via_trees;
use crate::verify::{run_suite, SuiteConfig};
use crate::{Cap, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "parkvol",
    version,
    about = "Parking function enumerators, descent numbers and chain polytope volumes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub options: GlobalOptions,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOptions {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Largest n an enumeration may touch. Values above the default need --force.
    #[arg(long, global = true)]
    pub cap: Option<usize>,

    /// Lift the default enumeration caps.
    #[arg(long, global = true)]
    pub force: bool,

    /// Worker threads (defaults to one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Inversion enumerator I_n(q) from trees and from parking functions.
    Invenum {
        #[arg(long)]
        n: usize,
    },
    /// Sum enumerator I_a(q) and its value at -1.
    Sumenum {
        /// Non-decreasing bound vector, e.g. 1,2,3,4.
        #[arg(long)]
        a: String,
    },
    /// Run the sign-reversing involution on all properly filled strips.
    Involution {
        #[arg(long)]
        a: String,
    },
    /// Volume of Z_S(d); symbolic in d when neither --d nor --q is given.
    Volume {
        #[arg(long)]
        n: usize,
        /// Subset of {2,…,n-1}, e.g. 2,4 or {} for the empty set.
        #[arg(long, default_value = "")]
        set: String,
        /// Non-decreasing bounds d_1,…,d_k as integers or p/q.
        #[arg(long)]
        d: Option<String>,
        /// Use d_i = q^(i-1).
        #[arg(long)]
        q: Option<String>,
    },
    /// Volume of the Pitman-Stanley polytope for c_1,…,c_n.
    PitmanStanley {
        #[arg(long)]
        c: String,
    },
    /// Number of permutations with descent set S; every S when --set is omitted.
    Beta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: Option<String>,
    },
    /// Euler numbers E_0, …, E_n.
    Euler {
        #[arg(long)]
        n: usize,
    },
    /// Weak compositions dominating a composition, given directly or as comp(S).
    Kappa {
        /// Composition, e.g. 1,3,1.
        #[arg(long, conflicts_with_all = ["n", "set"])]
        gamma: Option<String>,
        #[arg(long, requires = "n")]
        set: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run every identity check up to n.
    VerifyAll {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
}

/// Rendered output of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub text: String,
    pub success: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            success: true,
        }
    }
}

impl GlobalOptions {
    /// The cap for a command whose default is `default`.
    pub fn cap(&self, default: Cap) -> Result<Cap> {
        match (self.cap, self.force) {
            (Some(c), false) if c > default.0 => Err(Error::InvalidBounds(format!(
                "--cap {c} is above the default {} and needs --force",
                default.0
            ))),
            (Some(c), _) => Ok(Cap(c)),
            (None, true) => Ok(Cap(usize::MAX)),
            (None, false) => Ok(default),
        }
    }
}

pub fn parse_list<T, F>(text: &str, item: F) -> Result<Vec<T>>
where
    F: Fn(&str) -> Result<T>,
{
    let inner = text
        .trim()
        .trim_start_matches(['{', '(', '['])
        .trim_end_matches(['}', ')', ']']);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|s| item(s.trim())).collect()
}

fn parse_usize(s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::Parse(format!("not a non-negative integer: {s:?}")))
}

pub fn parse_avector(text: &str) -> Result<AVector> {
    let entries = parse_list(text, |s| {
        s.parse::<u32>()
            .map_err(|_| Error::Parse(format!("not a positive integer: {s:?}")))
    })?;
    AVector::new(entries)
}

pub fn parse_set(n: usize, text: &str) -> Result<DescentSet> {
    DescentSet::new(n, parse_list(text, parse_usize)?)
}

pub fn parse_rationals(text: &str) -> Result<Vec<Rational>> {
    parse_list(text, parse_rational)
}

fn subscript(n: usize) -> String {
    n.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

fn set_symbol(set: &DescentSet) -> String {
    if set.is_empty() {
        "∅".into()
    } else {
        set.to_string()
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

/// Configure the thread pool and run the chosen command.
pub fn run(cli: &Cli) -> Result<Report> {
    if let Some(jobs) = cli.options.jobs {
        // Ignore a second initialisation within one process.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    let o = &cli.options;
    match &cli.command {
        Command::Invenum { n } => cmd_invenum(*n, o),
        Command::Sumenum { a } => cmd_sumenum(&parse_avector(a)?, o),
        Command::Involution { a } => cmd_involution(&parse_avector(a)?, o),
        Command::Volume { n, set, d, q } => {
            let set = parse_set(*n, set)?;
            let d = match (d, q) {
                (Some(_), Some(_)) => {
                    return Err(Error::InvalidBounds(
                        "give either --d or --q, not both".into(),
                    ))
                }
                (Some(d), None) => Some(ZPolytopeSpec::new(set.clone(), parse_rationals(d)?)?),
                (None, Some(q)) => {
                    Some(ZPolytopeSpec::geometric(set.clone(), &parse_rational(q)?)?)
                }
                (None, None) => None,
            };
            match d {
                Some(spec) => cmd_volume(&spec, q.is_some(), o),
                None => cmd_volume_symbolic(&set, o),
            }
        }
        Command::PitmanStanley { c } => cmd_pitman_stanley(&parse_rationals(c)?, o),
        Command::Beta { n, set } => cmd_beta(*n, set.as_deref(), o),
        Command::Euler { n } => cmd_euler(*n, o),
        Command::Kappa { gamma, set, n } => {
            let gamma = match (gamma, n) {
                (Some(g), _) => {
                    let parts = parse_list(g, parse_usize)?;
                    if parts.is_empty() {
                        return Err(Error::InvalidComposition);
                    }
                    WeakComposition::new(parts)
                }
                (None, Some(n)) => {
                    comp_of_subset(&parse_set(*n, set.as_deref().unwrap_or(""))?)?.to_weak()
                }
                (None, None) => {
                    return Err(Error::InvalidBounds(
                        "give --gamma or --n with --set".into(),
                    ))
                }
            };
            cmd_kappa(&gamma, o)
        }
        Command::VerifyAll { n } => cmd_verify_all(*n, o),
    }
}

pub fn cmd_invenum(n: usize, o: &GlobalOptions) -> Result<Report> {
    let cap = o.cap(Cap::DEFAULT)?;
    let trees = inversion_enumerator_via_trees(n, cap)?;
    let parking = inversion_enumerator_via_parking(n, cap)?;
    let agree = trees == parking;
    let at_one = trees.eval_int(&BigInt::one());
    let at_minus_one = trees.eval_at_minus_one();
    let euler = BigInt::from(euler_number(n));
    let success = agree && at_minus_one == euler;
    let text = match o.format {
        Format::Plain => {
            let mut s = format!("I_{n}(q) = {trees}; I_{n}(1)={at_one}; ");
            if at_minus_one == euler {
                s += &format!("I_{n}(-1)={at_minus_one}=E_{n}\n");
            } else {
                s += &format!("I_{n}(-1)={at_minus_one}≠E_{n}={euler}\n");
            }
            if !agree {
                s += &format!("mismatch: parking functions give {parking}\n");
            }
            s
        }
        Format::Json => to_json(&json!({
            "n": n,
            "trees": trees.to_string(),
            "parking": parking.to_string(),
            "coefficients": trees.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "at_one": at_one.to_string(),
            "at_minus_one": at_minus_one.to_string(),
            "euler": euler.to_string(),
            "agree": success,
        })),
        Format::Csv => {
            let mut s = String::from("k,trees,parking\n");
            for k in 0..=n * n.saturating_sub(1) / 2 {
                s += &format!("{k},{},{}\n", trees.coeff(k), parking.coeff(k));
            }
            s
        }
    };
    Ok(Report { text, success })
}

pub fn cmd_sumenum(a: &AVector, o: &GlobalOptions) -> Result<Report> {
    let cap = o.cap(Cap::DEFAULT)?;
    let poly = sum_enumerator(a, cap)?;
    let value = poly.eval_at_minus_one();
    let predicted = predicted_at_minus_one(a);
    let set = subset_of_avector(a);
    let n = a.len();
    let success = value == predicted;
    let text = match o.format {
        Format::Plain => {
            let formula = if a.entries()[0].is_multiple_of(2) {
                "0 (a_1 even)".to_string()
            } else {
                let e = a.sum() - n as u64;
                format!(
                    "(-1)^{{{e}}}·β{}({})={predicted}",
                    subscript(n),
                    set_symbol(&set)
                )
            };
            format!(
                "I_ā(q) = {poly}; I(-1) = {value}; predicted {formula} {}\n",
                if success { "✓" } else { "✗" }
            )
        }
        Format::Json => to_json(&json!({
            "a": a.entries(),
            "S": set.members(),
            "sum_enumerator": poly.to_string(),
            "count": count_a_parking(a).to_string(),
            "at_minus_one": value.to_string(),
            "predicted": predicted.to_string(),
            "match": success,
        })),
        Format::Csv => {
            let mut s = String::from("k,coefficient\n");
            for (k, c) in poly.coeffs().iter().enumerate() {
                s += &format!("{k},{c}\n");
            }
            s
        }
    };
    Ok(Report { text, success })
}

fn moves_text(strip: &FilledStrip) -> String {
    strip
        .moveable_cells()
        .iter()
        .map(|m| m.map_or("-".to_string(), |d| d.to_string()))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_involution(a: &AVector, o: &GlobalOptions) -> Result<Report> {
    let cap = o.cap(Cap::INVOLUTION)?;
    let report = verify_involution_theorem(a, cap)?;
    let success = report.passed();
    let text = match o.format {
        Format::Plain => {
            let mut s = format!(
                "ā = {}, S = {}\nstrips: {}\nfixed points: {}\npairs: {}\nsigned sum: {}\npredicted: {} (β = {})\n",
                a,
                set_symbol(&report.subset),
                report.strips,
                report.fixed_points,
                report.pairs,
                report.signed_sum,
                report.predicted,
                report.beta
            );
            for f in &report.failures {
                s += &format!("failure {:?}: {}\n", f.kind, f.detail);
                if let Some(w) = &f.witness {
                    s += &format!("{w}\n{}", w.render());
                }
            }
            s += if success { "PASS\n" } else { "FAIL\n" };
            s
        }
        Format::Json => to_json(&json!({
            "a": a.entries(),
            "S": report.subset.members(),
            "strips": report.strips,
            "fixed_points": report.fixed_points,
            "pairs": report.pairs,
            "signed_sum": report.signed_sum.to_string(),
            "predicted": report.predicted.to_string(),
            "beta": report.beta.to_string(),
            "failures": report.failures.iter().map(|f| json!({
                "kind": format!("{:?}", f.kind),
                "detail": f.detail,
                "rows": f.witness.as_ref().map(|w| w.rows().to_vec()),
                "fill": f.witness.as_ref().map(|w| w.fill().to_vec()),
            })).collect::<Vec<_>>(),
            "passed": success,
        })),
        Format::Csv => {
            // One line per strip, with its image under ψ.
            let mut s = String::from("b,rows,fill,s,moveable,psi_rows\n");
            for strip in all_strips(a, cap)? {
                let b = parking_of_strip(&strip);
                let image = if strip.is_fixed_point() {
                    "fixed".to_string()
                } else {
                    match strip.psi() {
                        Ok(p) => format!("{:?}", p.rows()),
                        Err(e) => format!("error: {e}"),
                    }
                };
                s += &format!(
                    "{},{},{},{},{},{}\n",
                    csv_quote(&format!("{:?}", b.values())),
                    csv_quote(&format!("{:?}", strip.rows())),
                    csv_quote(&format!("{:?}", strip.fill())),
                    strip.s_statistic(),
                    csv_quote(&moves_text(&strip)),
                    csv_quote(&image)
                );
            }
            s
        }
    };
    Ok(Report { text, success })
}

pub fn cmd_volume(spec: &ZPolytopeSpec, geometric: bool, o: &GlobalOptions) -> Result<Report> {
    let cap = o.cap(Cap::DEFAULT)?;
    let formula = volume_formula(spec)?;
    let parking = volume_parking_sum(spec, cap)?;
    let integral = volume_integration_oracle(spec, cap)?;
    let success = formula == parking && formula == integral;
    let d_text: Vec<String> = spec.d().iter().map(format_rational).collect();
    let text = match o.format {
        Format::Plain => {
            let mut s = format!(
                "n = {}, S = {}, comp(S) = {}, d = ({})\n",
                spec.n(),
                set_symbol(spec.set()),
                spec.composition(),
                d_text.join(",")
            );
            s += &format!("signed multinomial sum: {}\n", format_rational(&formula));
            s += &format!("parking function sum:   {}\n", format_rational(&parking));
            s += &format!("iterated integral:      {}\n", format_rational(&integral));
            s += &format!("{}!·Vol = {}\n", spec.n(), volume_polynomial(spec.set())?);
            if geometric {
                let q = if spec.k() > 1 {
                    spec.d()[1].clone()
                } else {
                    Rational::one()
                };
                let scaled = &formula * Rational::from_integer(factorial(spec.n()).into());
                let en = abs_sum_enumerator_at(spec.set(), &q, cap)?;
                s += &format!(
                    "n!·Vol = {}, |I_ā(-q)| = {}\n",
                    format_rational(&scaled),
                    format_rational(&en)
                );
            }
            s += if success {
                "agree ✓\n"
            } else {
                "disagree ✗\n"
            };
            s
        }
        Format::Json => to_json(&VolumeJson::from_spec(spec)?),
        Format::Csv => format!(
            "n,S,d,formula,parking,integral\n{},{},{},{},{},{}\n",
            spec.n(),
            csv_quote(&spec.set().to_string()),
            csv_quote(&d_text.join(",")),
            format_rational(&formula),
            format_rational(&parking),
            format_rational(&integral)
        ),
    };
    Ok(Report { text, success })
}

pub fn cmd_volume_symbolic(set: &DescentSet, o: &GlobalOptions) -> Result<Report> {
    let poly = volume_polynomial(set)?;
    let text = match o.format {
        Format::Plain => format!("{}!·Vol(Z_{}) = {poly}\n", set.n(), set),
        Format::Json => to_json(&json!({
            "n": set.n(),
            "S": set.members(),
            "n_factorial_volume_polynomial": poly.to_string(),
        })),
        Format::Csv => {
            let mut s = String::from("coefficient,exponents\n");
            for (e, c) in poly.terms() {
                let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                s += &format!("{},{}\n", format_rational(c), csv_quote(&e.join(",")));
            }
            s
        }
    };
    Ok(Report::ok(text))
}

pub fn cmd_pitman_stanley(c: &[Rational], o: &GlobalOptions) -> Result<Report> {
    let cap = o.cap(Cap::DEFAULT)?;
    let formula = pitman_stanley_volume(c, cap)?;
    let oracle = pitman_stanley_integration_oracle(c, cap)?;
    let n = c.len();
    let scaled = &formula * Rational::from_integer(factorial(n).into());
    let success = formula == oracle;
    let text = match o.format {
        Format::Plain => format!(
            "parking function sum: {}\niterated integral:    {}\n{n}!·Vol = {}\n{}\n",
            format_rational(&formula),
            format_rational(&oracle),
            format_rational(&scaled),
            if success { "agree ✓" } else { "disagree ✗" }
        ),
        Format::Json => to_json(&json!({
            "c": c.iter().map(format_rational).collect::<Vec<_>>(),
            "volume": format_rational(&formula),
            "integral": format_rational(&oracle),
            "n_factorial_volume": format_rational(&scaled),
            "match": success,
        })),
        Format::Csv => format!(
            "volume,integral\n{},{}\n",
            format_rational(&formula),
            format_rational(&oracle)
        ),
    };
    Ok(Report { text, success })
}

pub fn cmd_beta(n: usize, set: Option<&str>, o: &GlobalOptions) -> Result<Report> {
    let cap = o.cap(Cap::DEFAULT)?;
    let sets: Vec<DescentSet> = match set {
        Some(text) => vec![parse_set(n, text)?],
        None => {
            cap.check(n)?;
            DescentSet::all(n).collect()
        }
    };
    let mut rows = Vec::with_capacity(sets.len());
    let mut success = true;
    for s in &sets {
        let b = beta(s);
        let brute = if n <= cap.0 {
            Some(beta_bruteforce(s, cap)?)
        } else {
            None
        };
        let ext = if n <= cap.0.min(20) {
            Some(linear_extensions_ribbon(s, cap)?)
        } else {
            None
        };
        success &= brute.as_ref().is_none_or(|x| *x == b) && ext.as_ref().is_none_or(|x| *x == b);
        rows.push((s, b, brute, ext));
    }
    let opt =
        |x: &Option<num_bigint::BigUint>| x.as_ref().map_or("-".to_string(), |v| v.to_string());
    let text = match o.format {
        Format::Plain => {
            let mut out = String::new();
            for (s, b, brute, ext) in &rows {
                out += &format!("β{}({}) = {b}", subscript(n), set_symbol(s));
                if brute.is_some() {
                    out += &format!(
                        "  (permutations: {}, linear extensions: {})",
                        opt(brute),
                        opt(ext)
                    );
                }
                out.push('\n');
            }
            out
        }
        Format::Json => to_json(
            &rows
                .iter()
                .map(|(s, b, brute, ext)| {
                    json!({
                        "n": n,
                        "S": s.members(),
                        "beta": b.to_string(),
                        "permutations": brute.as_ref().map(|v| v.to_string()),
                        "linear_extensions": ext.as_ref().map(|v| v.to_string()),
                    })
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut out = String::from("S,beta,permutations,linear_extensions\n");
            for (s, b, brute, ext) in &rows {
                out += &format!(
                    "{},{b},{},{}\n",
                    csv_quote(&s.to_string()),
                    opt(brute),
                    opt(ext)
                );
            }
            out
        }
    };
    Ok(Report { text, success })
}

pub fn cmd_euler(n: usize, o: &GlobalOptions) -> Result<Report> {
    let values: Vec<(usize, String)> = (0..=n).map(|m| (m, euler_number(m).to_string())).collect();
    let text = match o.format {
        Format::Plain => values
            .iter()
            .map(|(m, e)| format!("E_{m} = {e}\n"))
            .collect(),
        Format::Json => to_json(
            &values
                .iter()
                .map(|(m, e)| json!({"n": m, "euler": e}))
                .collect::<Vec<_>>(),
        ),
        Format::Csv => {
            let mut s = String::from("n,euler\n");
            for (m, e) in &values {
                s += &format!("{m},{e}\n");
            }
            s
        }
    };
    Ok(Report::ok(text))
}

pub fn cmd_kappa(gamma: &WeakComposition, o: &GlobalOptions) -> Result<Report> {
    let cap = o.cap(Cap::DEFAULT)?;
    cap.check(gamma.n())?;
    let rows: Vec<(WeakComposition, String)> = kappa_enumerate_weak(gamma)
        .map(|a| {
            let m = multinomial_of_parts(a.parts()).to_string();
            (a, m)
        })
        .collect();
    let text = match o.format {
        Format::Plain => {
            let mut s = format!("Κ{gamma}: {} compositions\n", rows.len());
            for (a, m) in &rows {
                s += &format!("{a}  {m}\n");
            }
            s
        }
        Format::Json => to_json(&json!({
            "gamma": gamma.parts(),
            "kappa": rows.iter().map(|(a, m)| json!({"alpha": a.parts(), "multinomial": m})).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut s = String::from("alpha,multinomial\n");
            for (a, m) in &rows {
                s += &format!("{},{m}\n", csv_quote(&a.to_string()));
            }
            s
        }
    };
    Ok(Report::ok(text))
}

pub fn cmd_verify_all(n_max: usize, o: &GlobalOptions) -> Result<Report> {
    let cap = o.cap(Cap::DEFAULT)?;
    let outcomes = run_suite(&SuiteConfig::new(n_max), cap)?;
    let success = outcomes.iter().all(|c| c.passed);
    let text = match o.format {
        Format::Plain => {
            let mut s = String::new();
            for c in &outcomes {
                s += &format!("{c} ({:.2}s)\n", c.elapsed.as_secs_f64());
            }
            let failed = outcomes.iter().filter(|c| !c.passed).count();
            s += &format!(
                "{} of {} checks passed\n",
                outcomes.len() - failed,
                outcomes.len()
            );
            s
        }
        Format::Json => to_json(&json!({
            "n_max": n_max,
            "checks": outcomes.iter().map(|c| json!({
                "id": c.id,
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
                "seconds": c.elapsed.as_secs_f64(),
            })).collect::<Vec<_>>(),
            "passed": success,
        })),
        Format::Csv => {
            let mut s = String::from("id,name,passed,seconds\n");
            for c in &outcomes {
                s += &format!(
                    "{},{},{},{:.3}\n",
                    c.id,
                    csv_quote(c.name),
                    c.passed,
                    c.elapsed.as_secs_f64()
                );
            }
            s
        }
    };
    Ok(Report { text, success })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Report> {
        let mut full = vec!["parkvol"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn invenum_plain() {
        assert_eq!(
            run_args(&["invenum", "--n", "2"]).unwrap().text,
            "I_2(q) = 2 + q; I_2(1)=3; I_2(-1)=1=E_2\n"
        );
        assert!(run_args(&["invenum", "--n", "1"])
            .unwrap()
            .text
            .starts_with("I_1(q) = 1;"));
        assert!(run_args(&["invenum", "--n", "4"])
            .unwrap()
            .text
            .contains("I_4(-1)=5=E_4"));
    }

    #[test]
    fn sumenum_plain() {
        let r = run_args(&["sumenum", "--a", "1,2"]).unwrap();
        assert_eq!(
            r.text,
            "I_ā(q) = 1 + 2q; I(-1) = -1; predicted (-1)^{1}·β₂(∅)=-1 ✓\n"
        );
        let r = run_args(&["sumenum", "--a", "2,2"]).unwrap();
        assert!(r.success && r.text.contains("I(-1) = 0"));
    }

    #[test]
    fn caps() {
        assert!(matches!(
            run_args(&["invenum", "--n", "9"]),
            Err(Error::CapExceeded { .. })
        ));
        assert!(run_args(&["invenum", "--n", "3", "--cap", "10"]).is_err());
        assert!(run_args(&["invenum", "--n", "3", "--cap", "10", "--force"]).is_ok());
        assert!(matches!(
            run_args(&["involution", "--a", "1,1,1,1,1,1,1"]),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn volume_outputs() {
        let r = run_args(&["volume", "--n", "2", "--d", "1,1"]).unwrap();
        assert!(r.success);
        assert!(r.text.contains("signed multinomial sum: 1/2"));
        let r = run_args(&[
            "volume", "--n", "5", "--set", "4", "--d", "1,1,1", "--format", "json",
        ])
        .unwrap();
        let v: VolumeJson = serde_json::from_str(&r.text).unwrap();
        assert_eq!(v.volume, "1/30");
        assert_eq!(v.set, vec![4]);
        let r = run_args(&["volume", "--n", "5", "--set", "{4}"]).unwrap();
        assert!(r.text.starts_with("5!·Vol(Z_{4}) = "));
        assert!(run_args(&["volume", "--n", "5", "--set", "4", "--d", "2,1,1"]).is_err());
        assert!(run_args(&["volume", "--n", "5", "--set", "1"]).is_err());
    }

    #[test]
    fn involution_outputs() {
        let r = run_args(&["involution", "--a", "1"]).unwrap();
        assert!(r.success);
        assert!(r.text.contains("fixed points: 1\npairs: 0"));
        let r = run_args(&["involution", "--a", "1,2,3,4"]).unwrap();
        assert!(r.text.contains("fixed points: 5"));
    }

    #[test]
    fn list_parsing() {
        assert_eq!(parse_list("{}", parse_usize).unwrap(), Vec::<usize>::new());
        assert_eq!(parse_list("(2, 4)", parse_usize).unwrap(), vec![2, 4]);
        assert!(parse_rationals("1/2,x").is_err());
        assert_eq!(subscript(12), "₁₂");
    }

    #[test]
    fn kappa_and_beta() {
        let r = run_args(&["kappa", "--gamma", "1,3,1"]).unwrap();
        assert!(r.text.starts_with("Κ(1,3,1): 9 compositions\n(5,0,0)  1\n"));
        let r = run_args(&["kappa", "--n", "5", "--set", "4"]).unwrap();
        assert!(r.text.starts_with("Κ(1,3,1)"));
        let r = run_args(&["beta", "--n", "4", "--set", "2"]).unwrap();
        assert_eq!(
            r.text,
            "β₄({2}) = 5  (permutations: 5, linear extensions: 5)\n"
        );
        assert!(
            run_args(&["beta", "--n", "4"])
                .unwrap()
                .text
                .lines()
                .count()
                == 8
        );
    }
}
