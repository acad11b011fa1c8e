use clap::{Parser, Subcommand, ValueEnum};
use dimpoly::bounds::{bound_closed, bound_general, check_bound_against_system, jacobi_number, witness, BoundReport};
use dimpoly::graded::{invariants_of, GradedSystem};
use dimpoly::serde_big::JsonInt;
use dimpoly::{is_in_w, minimizing_coefficients, Error, ExponentMatrix, NumericalPolynomial};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dimpoly", version, about = "Dimension polynomials, characteristic polynomials and typical dimension bounds")]
struct Cli {
    /// Input file; `-` or absent reads standard input.
    #[arg(short, long, global = true, value_name = "PATH")]
    input: Option<String>,

    /// Inline input instead of a file.
    #[arg(long, global = true, value_name = "TEXT", conflicts_with = "input")]
    json: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension polynomial of an exponent matrix.
    Dimpoly {
        /// Check against direct lattice-point counts for s up to S.
        #[arg(long, value_name = "S")]
        verify_upto: Option<u64>,
    },
    /// Minimizing coefficients of a numerical polynomial or of a matrix's polynomial.
    Mincoeffs,
    /// Decide whether a numerical polynomial is a dimension polynomial.
    InW,
    /// Characteristic polynomial and invariants of a graded system.
    Charpoly,
    /// Typical dimension bound for a codimension and generator orders.
    Bound {
        #[arg(long, value_name = "T")]
        codim: usize,
        #[arg(long, value_name = "LIST", value_delimiter = ',', required = true)]
        orders: Vec<u64>,
        /// Use the symbolic derivation instead of the closed form.
        #[arg(long)]
        general: bool,
        /// Include the derivation trace.
        #[arg(long)]
        trace: bool,
    },
    /// Jacobi number of a square matrix with optional undefined entries.
    Jacobi,
    /// Check a system's typical dimension against its bound.
    Verify,
    /// Build the four-variable witness family for order K and check its characteristic polynomial.
    ExampleEx {
        #[arg(long, value_name = "K")]
        k: u64,
    },
}

/// Command outcome: exit 2 marks a failed verification.
struct Outcome {
    value: Value,
    text: String,
    mismatch: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.value),
                Format::Text => print!("{}", out.text),
            }
            if out.mismatch {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            let value = json!({ "error": { "kind": err.kind(), "message": err.to_string() } });
            match cli.format {
                Format::Json => println!("{value}"),
                Format::Text => eprintln!("error: {err}"),
            }
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Dimpoly { verify_upto } => dimpoly(&read_input(cli)?, *verify_upto),
        Command::Mincoeffs => mincoeffs(&read_input(cli)?),
        Command::InW => in_w(&read_input(cli)?),
        Command::Charpoly => charpoly(&read_input(cli)?),
        Command::Bound { codim, orders, general, trace } => bound(*codim, orders, *general, *trace),
        Command::Jacobi => jacobi(&read_input(cli)?),
        Command::Verify => verify(&read_input(cli)?),
        Command::ExampleEx { k } => example(*k),
    }
}

fn read_input(cli: &Cli) -> Result<String, Error> {
    if let Some(text) = &cli.json {
        return Ok(text.clone());
    }
    let mut buf = String::new();
    match cli.input.as_deref() {
        None | Some("-") => {
            std::io::stdin().read_to_string(&mut buf).map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
        }
        Some(path) => {
            buf = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?;
        }
    }
    Ok(buf)
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn parse_json(text: &str) -> Result<Value, Error> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// JSON `{"m":…,"rows":…}` or the plain-text format.
fn parse_matrix(text: &str) -> Result<ExponentMatrix, Error> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))
    } else {
        ExponentMatrix::parse_text(text)
    }
}

/// `{"standard_coeffs":…}`, or a matrix whose dimension polynomial is taken.
fn parse_polynomial(text: &str) -> Result<NumericalPolynomial, Error> {
    if text.trim_start().starts_with('{') {
        let value = parse_json(text)?;
        if value.get("standard_coeffs").is_some() {
            return serde_json::from_value(value).map_err(|e| Error::InvalidInput(e.to_string()));
        }
    }
    Ok(parse_matrix(text)?.dimension_polynomial().polynomial)
}

fn polynomial_value(p: &NumericalPolynomial) -> Value {
    json!({
        "standard_coeffs": to_value(p)["standard_coeffs"],
        "binomial": p.render_binomial(),
        "expanded": p.render_expanded(),
    })
}

fn dimpoly(text: &str, verify_upto: Option<u64>) -> Result<Outcome, Error> {
    let e = parse_matrix(text)?.canonicalize();
    let result = e.dimension_polynomial();
    let mut value = json!({
        "m": e.m(),
        "rows": e.rows(),
        "polynomial": polynomial_value(&result.polynomial),
        "stability_bound": result.stability_bound,
    });
    let mut text = format!(
        "omega(s) = {}\n         = {}\nstable for s >= {}\n",
        result.polynomial.render_binomial(),
        result.polynomial.render_expanded(),
        result.stability_bound
    );
    let mut mismatch = false;
    if let Some(upto) = verify_upto {
        let first = result.first_mismatch(&e, upto);
        mismatch = first.is_some();
        value["verification"] = json!({ "upto": upto, "passed": !mismatch, "first_mismatch": first });
        text.push_str(&match first {
            None => format!("verified against direct counts for s in [{}, {upto}]\n", result.stability_bound),
            Some(s) => format!("MISMATCH with direct count at s = {s}\n"),
        });
    }
    Ok(Outcome { value, text, mismatch })
}

fn mincoeffs(text: &str) -> Result<Outcome, Error> {
    let p = parse_polynomial(text)?;
    let b = minimizing_coefficients(&p)?;
    let value = json!({ "polynomial": polynomial_value(&p), "minimizing_coefficients": to_value(&b)["b"] });
    let text = format!("omega(s) = {}\nminimizing coefficients (b_d .. b_0): {b}\n", p.render_binomial());
    Ok(Outcome { value, text, mismatch: false })
}

fn in_w(text: &str) -> Result<Outcome, Error> {
    let p = parse_polynomial(text)?;
    let w = is_in_w(&p)?;
    let value = json!({
        "polynomial": polynomial_value(&p),
        "minimizing_coefficients": to_value(&w.minimizing)["b"],
        "in_w": w.in_w,
        "witness": to_value(&w.witness),
    });
    let mut text = format!("omega(s) = {}\nminimizing coefficients: {}\n", p.render_binomial(), w.minimizing);
    match &w.witness {
        None => text.push_str("dimension polynomial: yes\n"),
        Some(n) => text.push_str(&format!("dimension polynomial: no (b_{} = {})\n", n.index, n.value)),
    }
    Ok(Outcome { value, text, mismatch: false })
}

fn charpoly(text: &str) -> Result<Outcome, Error> {
    let system = GradedSystem::from_json_str(text)?;
    let c = system.characteristic()?;
    let invariants = invariants_of(&c.polynomial, system.m())?;
    let value = json!({
        "polynomial": polynomial_value(&c.polynomial),
        "invariants": to_value(&invariants),
        "leader_matrices": to_value(&c.leader_matrices),
        "degrees": c.degrees,
        "stability_start": c.stability_start,
    });
    let mut text = format!(
        "omega(s) = {}\n         = {}\nequals dim (F/H)_s for s >= {}\n",
        c.polynomial.render_binomial(),
        c.polynomial.render_expanded(),
        c.stability_start
    );
    text.push_str(&invariants_text(&invariants));
    Ok(Outcome { value, text, mismatch: false })
}

fn invariants_text(inv: &dimpoly::graded::Invariants) -> String {
    match inv {
        dimpoly::graded::Invariants::NullModule => "null module\n".into(),
        dimpoly::graded::Invariants::Graded { type_degree, codimension, typical_dimension } => {
            format!("type {type_degree}, codimension {codimension}, typical dimension {typical_dimension}\n")
        }
    }
}

fn bound(codim: usize, orders: &[u64], general: bool, trace: bool) -> Result<Outcome, Error> {
    let report = if general {
        if orders.len() != 1 {
            return Err(Error::MultipleOrdersUnsupported { codim, count: orders.len() });
        }
        bound_general(codim, orders[0])?
    } else {
        bound_closed(codim, orders)?
    };
    let report = if trace { report } else { report.without_derivation() };
    let text = report_text(&report);
    Ok(Outcome { value: to_value(&report), text, mismatch: false })
}

fn report_text(r: &BoundReport) -> String {
    let orders: Vec<String> = r.orders.iter().map(u64::to_string).collect();
    let mut out = format!("codimension {}, orders [{}]: bound {}\n", r.codim, orders.join(", "), r.bound);
    if let Some(d) = &r.derivation {
        let list = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ");
        out.push_str(&format!("target: {}\n", d.target.render_binomial()));
        out.push_str(&format!("b (b_{} .. b_0): [{}]\n", d.b.len() - 1, list(&d.b)));
        out.push_str(&format!("c (c_{} .. c_0): [{}]\n", d.c.len() - 1, list(&d.c)));
        for st in &d.stages {
            out.push_str(&format!("  b_{} = {}  remainder {}\n", st.subscript, st.coefficient, st.remainder.render_binomial()));
        }
    }
    if let Some(c) = &r.closed_form {
        if r.derivation.is_some() || r.method == dimpoly::bounds::BoundMethod::General {
            out.push_str(&format!("closed form: {c}\n"));
        }
    }
    for f in &r.discrepancy_flags {
        out.push_str(&format!("discrepancy: {f}\n"));
    }
    out
}

/// A JSON array of rows with `null` for undefined entries, optionally under
/// `"matrix"`; or text rows with `-` for undefined entries.
fn parse_order_matrix(text: &str) -> Result<Vec<Vec<Option<i64>>>, Error> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let mut value = parse_json(text)?;
        if let Some(inner) = value.get_mut("matrix") {
            value = inner.take();
        }
        return serde_json::from_value(value).map_err(|e| Error::InvalidInput(e.to_string()));
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|t| match t {
                    "-" | "_" | "null" => Ok(None),
                    _ => t.parse::<i64>().map(Some).map_err(|e| Error::InvalidInput(format!("bad entry {t:?}: {e}"))),
                })
                .collect()
        })
        .collect()
}

fn jacobi(text: &str) -> Result<Outcome, Error> {
    let matrix = parse_order_matrix(text)?;
    let j = jacobi_number(&matrix)?;
    let value = json!({ "n": matrix.len(), "jacobi_number": j });
    let text = match j {
        Some(v) => format!("{v}\n"),
        None => "undefined\n".into(),
    };
    Ok(Outcome { value, text, mismatch: false })
}

fn verify(text: &str) -> Result<Outcome, Error> {
    let system = GradedSystem::from_json_str(text)?;
    let verdict = check_bound_against_system(&system)?;
    let mut text = invariants_text(&verdict.invariants);
    match &verdict.report {
        Some(r) if verdict.applicable => {
            text.push_str(&format!(
                "bound {} ({}): {}\n",
                r.bound,
                if verdict.holds { "holds" } else { "VIOLATED" },
                verdict.invariants.typical_dimension().map_or_else(String::new, |t| format!("typical dimension {t} <= {}", r.bound))
            ));
        }
        _ => text.push_str("no bound asserted\n"),
    }
    Ok(Outcome { value: to_value(&verdict), mismatch: !verdict.holds, text })
}

fn example(k: u64) -> Result<Outcome, Error> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be positive".into()));
    }
    let omega = dimpoly::graded::charpoly(&witness::system(k))?;
    let expected = witness::expected_typical_dimension(k);
    let matched = omega.degree().unwrap_or(0) == 0 && omega.coeff(0) == expected;
    let charpoly = if omega.degree().unwrap_or(0) == 0 {
        to_value(&JsonInt(omega.coeff(0)))
    } else {
        Value::String(omega.render_binomial())
    };
    let value = json!({
        "k": k,
        "charpoly": charpoly,
        "expected": to_value(&JsonInt(expected.clone())),
        "match": matched,
    });
    let text = format!(
        "k = {k}: characteristic polynomial {}, expected {expected}: {}\n",
        omega.render_binomial(),
        if matched { "match" } else { "MISMATCH" }
    );
    Ok(Outcome { value, text, mismatch: !matched })
}
