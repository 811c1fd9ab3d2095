//! Command-line front end. [`run`] parses arguments, prints either a human
//! table or a JSON document, and returns the process exit code:
//! `0` success, `1` failed verification or internal inconsistency,
//! `2` usage, parse or precondition error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::characters::{branch_equal_rank, tensor_product, weyl_dim};
use crate::dirac::{dirac_kernel, euler_verify, verify_chi, KernelResult};
use crate::error::{LieError, Result};
use crate::lattice::{LatticeSpec, Rational, Weight};
use crate::roots::{build_classical, parse_family_rank, RootSystem, WeylElement};
use crate::spin::{chi_trace_difference, spinor_weights};
use crate::sympair::{builtin, builtin_names, validate_pair, w1_enumerate, SymmetricPair};

/// On-disk description of a custom symmetric pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub name: String,
    pub rank: usize,
    pub positive_roots: Vec<String>,
    pub h_positive_indices: Vec<usize>,
    #[serde(rename = "lattice_F_shifts")]
    pub lattice_f_shifts: Vec<String>,
    #[serde(rename = "lattice_F1_shifts")]
    pub lattice_f1_shifts: Vec<String>,
}

impl PairFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| LieError::Parse {
            input: "pair file".into(),
            reason: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("pair file serializes")
    }

    /// Describe an existing pair.
    pub fn from_pair(p: &SymmetricPair) -> Self {
        let strings = |ws: &[Weight]| ws.iter().map(Weight::to_string).collect();
        PairFile {
            name: p.name().to_string(),
            rank: p.rank(),
            positive_roots: strings(p.root_system().positive_roots()),
            h_positive_indices: p.h_indices().to_vec(),
            lattice_f_shifts: strings(p.lattice_f().shifts()),
            lattice_f1_shifts: strings(p.lattice_f1().shifts()),
        }
    }

    /// Build and validate the pair.
    pub fn to_pair(&self) -> Result<SymmetricPair> {
        let parse = |xs: &[String]| {
            xs.iter()
                .map(|s| s.parse())
                .collect::<Result<Vec<Weight>>>()
        };
        let roots = parse(&self.positive_roots)?;
        let g = RootSystem::new(self.rank, roots, None)?;
        let f = LatticeSpec::new(self.rank, parse(&self.lattice_f_shifts)?)?;
        let f1 = LatticeSpec::new(self.rank, parse(&self.lattice_f1_shifts)?)?;
        SymmetricPair::validated(self.name.clone(), g, self.h_positive_indices.clone(), f, f1)
    }
}

/// A built-in pair name or the path of a pair file.
pub fn resolve_pair(name_or_path: &str) -> Result<SymmetricPair> {
    match builtin(name_or_path) {
        Err(LieError::UnknownPair(_)) if Path::new(name_or_path).is_file() => {
            let text = std::fs::read_to_string(name_or_path).map_err(|e| LieError::Parse {
                input: name_or_path.to_string(),
                reason: e.to_string(),
            })?;
            PairFile::from_json(&text)?.to_pair()
        }
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(
    name = "dirac-kernel",
    version,
    about = "Dirac kernels on equal-rank symmetric spaces, with exact verification"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Built-in and custom symmetric pairs.
    #[command(subcommand)]
    Pair(PairCommand),
    /// Spinor weights and the half-spin decomposition.
    Spinor { pair: String },
    /// Classify the Dirac kernel for a highest weight of H.
    Kernel {
        pair: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Independent checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Restrict an irreducible of G to H.
    Branch {
        pair: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Decompose a tensor product, e.g. `tensor B2 --nu1 1,0 --nu2 1,0`.
    Tensor {
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        nu1: String,
        #[arg(long, allow_hyphen_values = true)]
        nu2: String,
    },
    /// Weyl dimension of an irreducible, e.g. `dim B2 --nu 1/2,1/2`.
    Dim {
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
}

#[derive(Subcommand, Debug)]
enum PairCommand {
    /// List the built-in pairs.
    List,
    /// Show roots, half-sums, Weyl group data and validation for a pair.
    Show { pair: String },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Recompute the kernel from the Casimir shell and Frobenius multiplicities.
    Euler {
        pair: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Check the half-spin decomposition and the Casimir scalar.
    Chi { pair: String },
}

/// What a subcommand produced.
struct Outcome {
    text: String,
    machine: Value,
    passed: bool,
}

impl Outcome {
    fn ok(text: String, machine: Value) -> Self {
        Outcome {
            text,
            machine,
            passed: true,
        }
    }
}

fn exit_code(e: &LieError) -> i32 {
    match e {
        LieError::Consistency(_)
        | LieError::Symmetry(_)
        | LieError::Decomposition(_)
        | LieError::Overflow(_) => 1,
        _ => 2,
    }
}

/// Run the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(out, "{}", e.render());
                    return if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                        2
                    } else {
                        0
                    };
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let written = match cli.format {
                Format::Text => writeln!(out, "{}", outcome.text.trim_end()),
                Format::Machine => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&outcome.machine).expect("JSON value serializes")
                ),
            };
            if written.is_err() {
                return 1;
            }
            if outcome.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn parse_weight(s: &str) -> Result<Weight> {
    s.parse()
}

fn rat_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn weight_json(w: &Weight) -> Value {
    Value::Array(w.coords().iter().map(rat_json).collect())
}

fn element_json(e: &WeylElement) -> Value {
    let n = e.dim();
    let rows: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| rat_json(e.entry(i, j))).collect()))
        .collect();
    json!({
        "word": e.word().map(|w| w.iter().map(|i| i + 1).collect::<Vec<_>>()),
        "sign": e.sign(),
        "matrix": rows,
    })
}

fn multiplicities_json(m: &BTreeMap<Weight, i64>) -> Value {
    Value::Array(
        m.iter()
            .map(|(w, c)| json!({ "weight": weight_json(w), "multiplicity": c }))
            .collect(),
    )
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Pair(PairCommand::List) => pair_list(),
        Command::Pair(PairCommand::Show { pair }) => pair_show(&resolve_pair(pair)?),
        Command::Spinor { pair } => spinor(&resolve_pair(pair)?),
        Command::Kernel { pair, mu } => {
            let p = resolve_pair(pair)?;
            let r = dirac_kernel(&p, &parse_weight(mu)?)?;
            Ok(Outcome::ok(r.to_string(), kernel_json(&r)))
        }
        Command::Verify(VerifyCommand::Euler { pair, mu }) => {
            let p = resolve_pair(pair)?;
            let report = euler_verify(&p, &parse_weight(mu)?)?;
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| json!({ "nu": weight_json(&r.nu), "plus": r.plus, "minus": r.minus }))
                .collect();
            let machine = json!({
                "pair": report.pair,
                "kernel": kernel_json(&report.kernel),
                "shell": rows,
                "signed_sum": multiplicities_json(&report.signed_sum),
                "expected": multiplicities_json(&report.expected),
                "bound_ok": report.bound_ok,
                "sum_ok": report.sum_ok,
                "passed": report.passed(),
            });
            Ok(Outcome {
                text: report.to_string(),
                machine,
                passed: report.passed(),
            })
        }
        Command::Verify(VerifyCommand::Chi { pair }) => {
            let p = resolve_pair(pair)?;
            let report = verify_chi(&p)?;
            let decomposition = match &report.decomposition {
                Ok(d) => json!({
                    "plus": multiplicities_json(&d.plus),
                    "minus": multiplicities_json(&d.minus),
                }),
                Err(e) => json!({ "error": e }),
            };
            let machine = json!({
                "pair": report.pair,
                "decomposition": decomposition,
                "trace_identity_ok": report.trace_identity_ok,
                "disjoint_ok": report.disjoint_ok,
                "multiplicity_one_ok": report.multiplicity_one_ok,
                "casimir": match &report.casimir {
                    Ok(c) => rat_json(c),
                    Err(e) => json!({ "error": e }),
                },
                "passed": report.passed(),
            });
            Ok(Outcome {
                text: report.to_string(),
                machine,
                passed: report.passed(),
            })
        }
        Command::Branch { pair, nu } => branch(&resolve_pair(pair)?, &parse_weight(nu)?),
        Command::Tensor { group, nu1, nu2 } => {
            let (family, rank) = parse_family_rank(group)?;
            let rs = build_classical(family, rank)?;
            let (a, b) = (parse_weight(nu1)?, parse_weight(nu2)?);
            let dec = tensor_product(&rs, &a, &b)?;
            let mut text = format!("{group}: ({a}) x ({b})\n");
            let mut total = 0u64;
            for (w, c) in &dec {
                let d = weyl_dim(&rs, w)?;
                total += d * (*c as u64);
                text.push_str(&format!("  ({w})  multiplicity {c}  dim {d}\n"));
            }
            let (da, db) = (weyl_dim(&rs, &a)?, weyl_dim(&rs, &b)?);
            text.push_str(&format!("dimension check: {da} x {db} = {total}"));
            let machine = json!({
                "group": group,
                "components": multiplicities_json(&dec),
                "dimension": total,
            });
            Ok(Outcome {
                text,
                machine,
                passed: da * db == total,
            })
        }
        Command::Dim { group, nu } => {
            let (family, rank) = parse_family_rank(group)?;
            let rs = build_classical(family, rank)?;
            let nu = parse_weight(nu)?;
            let d = weyl_dim(&rs, &nu)?;
            Ok(Outcome::ok(
                d.to_string(),
                json!({ "group": group, "nu": weight_json(&nu), "dimension": d }),
            ))
        }
    }
}

fn kernel_json(r: &KernelResult) -> Value {
    json!({
        "status": r.status.to_string(),
        "mu": weight_json(&r.mu),
        "lambda": weight_json(&r.lambda),
        "nu": r.nu.as_ref().map(weight_json),
        "sigma": r.sigma.as_ref().map(element_json),
        "sigma_sign": r.sigma_sign,
        "dimension": r.dimension,
        "casimir": rat_json(&r.casimir),
    })
}

fn group_label(p: &SymmetricPair) -> String {
    p.root_system()
        .name()
        .map(str::to_string)
        .unwrap_or_else(|| format!("rank {}", p.rank()))
}

fn pair_list() -> Result<Outcome> {
    let mut text = String::new();
    let mut items = Vec::new();
    for name in builtin_names() {
        let p = builtin(name)?;
        text.push_str(&format!(
            "{name:<14} G={:<4} m={}  dim p={}\n",
            group_label(&p),
            p.m(),
            2 * p.m()
        ));
        items.push(json!({ "name": name, "group": group_label(&p), "m": p.m() }));
    }
    Ok(Outcome::ok(text, Value::Array(items)))
}

fn pair_show(p: &SymmetricPair) -> Result<Outcome> {
    let report = validate_pair(p);
    let w = p.weyl_group()?.len();
    let wh = p.weyl_group_h()?.len();
    let w1 = w1_enumerate(p)?;
    let d = p.deltas();
    let mut text = format!("pair: {}\nG: {}\n", p.name(), group_label(p));
    text.push_str("positive roots:\n");
    for (i, r) in p.root_system().positive_roots().iter().enumerate() {
        let class = if p.h_indices().contains(&i) { "h" } else { "p" };
        text.push_str(&format!("  [{i}] ({r})  {class}\n"));
    }
    let simple: Vec<String> = p
        .root_system()
        .simple_roots()
        .iter()
        .map(|s| format!("({s})"))
        .collect();
    text.push_str(&format!("simple roots: {}\n", simple.join(" ")));
    text.push_str(&format!(
        "delta: ({})\ndelta_h: ({})\ndelta_p: ({})\n",
        d.delta, d.delta_h, d.delta_p
    ));
    text.push_str(&format!("|W| = {w}  |W_H| = {wh}  |W1| = {}\n", w1.len()));
    text.push_str("W1:\n");
    for s in w1.iter() {
        text.push_str(&format!(
            "  {:<16} sign {:+}  delta_p^sigma = ({})\n",
            s.element.to_string(),
            s.sign,
            s.delta_p_sigma
        ));
    }
    text.push_str(&format!("validation:\n{report}"));
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
        .collect();
    let w1_json: Vec<Value> = w1
        .iter()
        .map(|s| json!({ "sigma": element_json(&s.element), "sign": s.sign, "delta_p_sigma": weight_json(&s.delta_p_sigma) }))
        .collect();
    let machine = json!({
        "pair": PairFile::from_pair(p),
        "simple_roots": p.root_system().simple_roots().iter().map(weight_json).collect::<Vec<_>>(),
        "delta": weight_json(&d.delta),
        "delta_h": weight_json(&d.delta_h),
        "delta_p": weight_json(&d.delta_p),
        "weyl_order": w,
        "weyl_order_h": wh,
        "w1": w1_json,
        "validation": checks,
        "dim_p": report.dim_p,
    });
    Ok(Outcome {
        text,
        machine,
        passed: report.passed(),
    })
}

fn spinor(p: &SymmetricPair) -> Result<Outcome> {
    let sw = spinor_weights(p)?;
    let mut text = format!("pair: {}  m = {}\n", p.name(), p.m());
    let mut rows = Vec::new();
    for e in &sw.entries {
        let eps: String = e
            .epsilon
            .iter()
            .map(|&x| if x > 0 { '+' } else { '-' })
            .collect();
        let class = if e.parity > 0 { "E+" } else { "E-" };
        text.push_str(&format!("  {eps:<8} ({})  {class}\n", e.weight));
        rows.push(
            json!({ "epsilon": e.epsilon, "weight": weight_json(&e.weight), "parity": e.parity }),
        );
    }
    let report = verify_chi(p)?;
    match &report.decomposition {
        Ok(d) => text.push_str(&format!("{d}\n")),
        Err(e) => text.push_str(&format!("decomposition failed: {e}\n")),
    }
    let product = chi_trace_difference(p)?;
    text.push_str(&format!("trace difference: {product}\n"));
    text.push_str(&format!(
        "matches signed spinor weights: {}",
        if report.trace_identity_ok {
            "yes"
        } else {
            "NO"
        }
    ));
    let decomposition = report.decomposition.as_ref().ok().map(
        |d| json!({ "plus": multiplicities_json(&d.plus), "minus": multiplicities_json(&d.minus) }),
    );
    let machine = json!({
        "pair": p.name(),
        "m": p.m(),
        "weights": rows,
        "chi": decomposition,
        "trace_difference": multiplicities_json(&product.to_map()),
        "trace_identity_ok": report.trace_identity_ok,
    });
    Ok(Outcome {
        text,
        machine,
        passed: report.decomposition.is_ok() && report.trace_identity_ok,
    })
}

fn branch(p: &SymmetricPair, nu: &Weight) -> Result<Outcome> {
    let dec = branch_equal_rank(p, nu)?;
    let g_dim = weyl_dim(p.root_system(), nu)?;
    let mut text = format!("{}: restriction of ({nu})\n", p.name());
    let mut total = 0u64;
    for (w, c) in &dec {
        let d = weyl_dim(p.h_system(), w)?;
        total += d * (*c as u64);
        text.push_str(&format!("  ({w})  multiplicity {c}  dim {d}\n"));
    }
    text.push_str(&format!("dimension check: {g_dim} = {total}"));
    let machine = json!({
        "pair": p.name(),
        "nu": weight_json(nu),
        "components": multiplicities_json(&dec),
        "dimension": g_dim,
    });
    Ok(Outcome {
        text,
        machine,
        passed: g_dim == total,
    })
}
