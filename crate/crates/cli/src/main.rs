//! `pisotriple`: exact computations around Diophantine triples in
//! Pisot-type recurrence sequences.

mod output;
mod poly;

use std::path::PathBuf;
use std::sync::OnceLock;

use clap::{Args, Parser, Subcommand};
use num_traits::Signed;
use serde_json::{json, Value};

use pisotriple_core::arith::dyadic::decimal_string;
use pisotriple_core::cancel::CancelToken;
use pisotriple_core::hypothesis::{theorem_applicability, SquarenessVerdict};
use pisotriple_core::recurrence::{binet_coefficients, build_from_trace, RecurrenceSpec};
use pisotriple_core::search::{
    dplus_extension, euler_quadruple, find_triples, gcd_scan, SearchError,
};
use pisotriple_core::{certify_pisot, family_poly, Family, Int, IntPoly, PisotRejection, Rat};

use output::{emit, CommandOutput, Format};

const ROOT_DIGITS: u32 = 20;
const RATIO_DIGITS: u32 = 12;

#[derive(Parser)]
#[command(name = "pisotriple", version, about = "Diophantine triples in Pisot-type recurrences")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Degree cap for splitting-field constructions.
    #[arg(long, global = true, env = "PISOTRIPLE_DEGREE_CAP", default_value_t = 64)]
    degree_cap: usize,
    /// Per-value factorization budget in milliseconds.
    #[arg(long, global = true, env = "PISOTRIPLE_FACTOR_BUDGET_MS", default_value_t = 5000)]
    factor_budget_ms: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Pisot certification and the explicit families.
    Pisot {
        #[command(subcommand)]
        cmd: PisotCmd,
    },
    /// Recurrence evaluation and Binet data.
    Rec {
        #[command(subcommand)]
        cmd: RecCmd,
    },
    /// Finiteness-theorem hypothesis checks.
    Hyp {
        #[command(subcommand)]
        cmd: HypCmd,
    },
    /// Triple search and gcd scans.
    Search {
        #[command(subcommand)]
        cmd: SearchCmd,
    },
    /// Classical quadruple formulas.
    Quad {
        #[command(subcommand)]
        cmd: QuadCmd,
    },
}

#[derive(Args)]
struct PolyArg {
    /// Polynomial, e.g. "x^3-x-1".
    #[arg(long, conflicts_with = "coeffs")]
    poly: Option<String>,
    /// Ascending coefficient list, e.g. "-1,-1,0,1".
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

impl PolyArg {
    fn parse(&self) -> Result<IntPoly, String> {
        match (&self.poly, &self.coeffs) {
            (Some(s), None) => poly::parse_poly(s),
            (None, Some(s)) => poly::parse_coeffs(s),
            _ => Err("exactly one of --poly or --coeffs is required".into()),
        }
    }

    fn input_json(&self) -> Value {
        match (&self.poly, &self.coeffs) {
            (Some(s), _) => json!({ "poly": s }),
            (_, Some(s)) => json!({ "coeffs": s }),
            _ => Value::Null,
        }
    }
}

#[derive(Subcommand)]
enum PisotCmd {
    /// Certify the Pisot property.
    Certify(PolyArg),
    /// Expand a named family polynomial.
    Family {
        /// tower-a, tower-b or fib-perturbed.
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand)]
enum RecCmd {
    /// Evaluate F_n over an index range.
    Eval {
        #[command(flatten)]
        poly: PolyArg,
        /// Initial values F_0,...,F_{k-1}.
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        /// Inclusive index range "lo,hi".
        #[arg(long)]
        range: String,
    },
    /// Binet coefficient f1 = f/d from the trace-form system.
    Binet {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, allow_hyphen_values = true)]
        init: String,
    },
    /// Build a recurrence from dF_n = Tr(f alpha^n).
    FromTrace {
        #[command(flatten)]
        poly: PolyArg,
        /// Integer power-basis coordinates of f.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value = "1")]
        d: String,
    },
}

#[derive(Subcommand)]
enum HypCmd {
    /// Report which finiteness clause applies.
    Check {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        /// Run the squareness computation even when an unconditional
        /// clause already applies.
        #[arg(long)]
        force_squareness: bool,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Exhaustive Diophantine triple search up to c_max.
    Triples {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        #[arg(long)]
        c_max: u64,
        /// 1 matches "1 <= a < b < c", 2 matches "1 < a < b < c".
        #[arg(long, default_value_t = 1)]
        a_min: u64,
    },
    /// Empirical gcd-lemma scan over y_lo <= y < z <= z_hi.
    GcdScan {
        #[command(flatten)]
        poly: PolyArg,
        #[arg(long, allow_hyphen_values = true)]
        init: String,
        #[arg(long)]
        y_lo: u64,
        #[arg(long)]
        z_hi: u64,
    },
}

#[derive(Subcommand)]
enum QuadCmd {
    /// Euler's quadruple from a pair with ab+1 square.
    Euler { a: String, b: String },
    /// d+ extension of a Diophantine triple.
    Dplus { a: String, b: String, c: String },
}

static TOKEN: OnceLock<CancelToken> = OnceLock::new();

extern "C" fn on_sigint(_sig: libc::c_int) {
    if let Some(t) = TOKEN.get() {
        t.cancel();
    }
}

fn install_sigint() -> CancelToken {
    let token = TOKEN.get_or_init(CancelToken::new).clone();
    unsafe {
        libc::signal(libc::SIGINT, on_sigint as *const () as libc::sighandler_t);
    }
    token
}

fn main() {
    let cli = Cli::parse();
    let token = install_sigint();
    let out = run(&cli, &token);
    let text = out.render(cli.format);
    if let Err(e) = emit(&text, cli.out.as_deref()) {
        eprintln!("cannot write output: {e}");
        std::process::exit(1);
    }
    std::process::exit(out.exit_code);
}

fn domain_error(command: &str, input: Value, message: String) -> CommandOutput {
    CommandOutput {
        command: command.to_string(),
        input,
        result: json!({ "error": message }),
        status: "error",
        table: None,
        exit_code: 2,
    }
}

fn rat_exact(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn run(cli: &Cli, token: &CancelToken) -> CommandOutput {
    match &cli.cmd {
        Cmd::Pisot { cmd } => match cmd {
            PisotCmd::Certify(p) => cmd_certify(p),
            PisotCmd::Family { family, k } => cmd_family(family, *k),
        },
        Cmd::Rec { cmd } => match cmd {
            RecCmd::Eval { poly, init, range } => cmd_eval(poly, init, range),
            RecCmd::Binet { poly, init } => cmd_binet(poly, init),
            RecCmd::FromTrace { poly, f, d } => cmd_from_trace(poly, f, d),
        },
        Cmd::Hyp { cmd } => match cmd {
            HypCmd::Check {
                poly,
                init,
                force_squareness,
            } => cmd_hyp_check(poly, init, *force_squareness, cli.degree_cap, token),
        },
        Cmd::Search { cmd } => match cmd {
            SearchCmd::Triples {
                poly,
                init,
                c_max,
                a_min,
            } => cmd_triples(poly, init, *c_max, *a_min, cli.factor_budget_ms),
            SearchCmd::GcdScan {
                poly,
                init,
                y_lo,
                z_hi,
            } => cmd_gcd_scan(poly, init, *y_lo, *z_hi),
        },
        Cmd::Quad { cmd } => match cmd {
            QuadCmd::Euler { a, b } => cmd_euler(a, b),
            QuadCmd::Dplus { a, b, c } => cmd_dplus(a, b, c),
        },
    }
}

fn cmd_certify(parg: &PolyArg) -> CommandOutput {
    let command = "pisot certify";
    let input = parg.input_json();
    let p = match parg.parse() {
        Ok(p) => p,
        Err(e) => return domain_error(command, input, e),
    };
    match certify_pisot(&p) {
        Ok(cert) => {
            let dom = cert.dominant_box();
            let conj: Vec<Value> = cert
                .conjugate_boxes()
                .iter()
                .map(|b| {
                    json!({
                        "re": decimal_string(&b.re().mid(), ROOT_DIGITS),
                        "im": decimal_string(&b.im().mid(), ROOT_DIGITS),
                        "modulus_upper": decimal_string(&b.modulus_upper(128), ROOT_DIGITS),
                    })
                })
                .collect();
            CommandOutput {
                command: command.into(),
                input,
                result: json!({
                    "accepted": true,
                    "poly": p.to_string(),
                    "degree": cert.degree(),
                    "is_unit": cert.is_unit(),
                    "precision_bits": cert.precision_bits(),
                    "dominant_lo": decimal_string(&dom.re().lo, ROOT_DIGITS),
                    "dominant_hi": decimal_string(&dom.re().hi, ROOT_DIGITS),
                    "dominant": decimal_string(&cert.dominant_midpoint(), ROOT_DIGITS),
                    "conjugates": conj,
                }),
                status: "ok",
                table: None,
                exit_code: 0,
            }
        }
        Err(PisotRejection::UndecidableAtMaxPrecision(bits)) => CommandOutput {
            command: command.into(),
            input,
            result: json!({
                "accepted": false,
                "reason": format!("undecidable at max precision {bits} bits"),
            }),
            status: "undecided",
            table: None,
            exit_code: 3,
        },
        Err(reason) => CommandOutput {
            command: command.into(),
            input,
            result: json!({ "accepted": false, "reason": reason.to_string() }),
            status: "rejected",
            table: None,
            exit_code: 2,
        },
    }
}

fn cmd_family(family: &str, k: usize) -> CommandOutput {
    let command = "pisot family";
    let input = json!({ "family": family, "k": k });
    let fam: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return domain_error(command, input, e),
    };
    match family_poly(fam, k) {
        Ok(p) => CommandOutput {
            command: command.into(),
            input,
            result: json!({
                "family": fam.to_string(),
                "k": k,
                "poly": p.to_string(),
                "degree": p.deg(),
            }),
            status: "ok",
            table: None,
            exit_code: 0,
        },
        Err(e) => domain_error(command, input, e),
    }
}

fn parse_spec(parg: &PolyArg, init: &str) -> Result<RecurrenceSpec, String> {
    let p = parg.parse()?;
    let init = poly::parse_int_list(init)?;
    RecurrenceSpec::new(p, init).map_err(|e| e.to_string())
}

fn spec_input(parg: &PolyArg, init: &str) -> Value {
    let mut v = parg.input_json();
    if let Value::Object(map) = &mut v {
        map.insert("init".into(), json!(init));
    }
    v
}

fn cmd_eval(parg: &PolyArg, init: &str, range: &str) -> CommandOutput {
    let command = "rec eval";
    let mut input = spec_input(parg, init);
    if let Value::Object(map) = &mut input {
        map.insert("range".into(), json!(range));
    }
    let spec = match parse_spec(parg, init) {
        Ok(s) => s,
        Err(e) => return domain_error(command, input, e),
    };
    let bounds: Vec<&str> = range.split(',').collect();
    let parsed: Option<(u64, u64)> = match bounds.as_slice() {
        [lo, hi] => lo
            .trim()
            .parse()
            .ok()
            .zip(hi.trim().parse().ok())
            .filter(|(lo, hi)| lo <= hi),
        _ => None,
    };
    let Some((lo, hi)) = parsed else {
        return domain_error(command, input, format!("bad range `{range}`"));
    };
    if let Err(e) = spec.validate_pisot_type() {
        return domain_error(command, input, e.to_string());
    }
    let values = spec.eval_range(lo, hi);
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(i, v)| vec![(lo + i as u64).to_string(), v.to_string()])
        .collect();
    CommandOutput {
        command: command.into(),
        input,
        result: json!({
            "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        }),
        status: "ok",
        table: Some((vec!["n", "F_n"], rows)),
        exit_code: 0,
    }
}

fn cmd_binet(parg: &PolyArg, init: &str) -> CommandOutput {
    let command = "rec binet";
    let input = spec_input(parg, init);
    let spec = match parse_spec(parg, init) {
        Ok(s) => s,
        Err(e) => return domain_error(command, input, e),
    };
    if let Err(e) = spec.validate_pisot_type() {
        return domain_error(command, input, e.to_string());
    }
    match binet_coefficients(&spec) {
        Ok(bd) => CommandOutput {
            command: command.into(),
            input,
            result: json!({
                "f1": bd.f1().to_string(),
                "f1_coords": bd.f1().coords().iter().map(rat_exact).collect::<Vec<_>>(),
                "d": bd.d().to_string(),
                "f": bd.f().to_string(),
                "f_coords": bd.f().coords().iter().map(rat_exact).collect::<Vec<_>>(),
            }),
            status: "ok",
            table: None,
            exit_code: 0,
        },
        Err(e) => domain_error(command, input, e.to_string()),
    }
}

fn cmd_from_trace(parg: &PolyArg, f: &str, d: &str) -> CommandOutput {
    let command = "rec from-trace";
    let mut input = parg.input_json();
    if let Value::Object(map) = &mut input {
        map.insert("f".into(), json!(f));
        map.insert("d".into(), json!(d));
    }
    let p = match parg.parse() {
        Ok(p) => p,
        Err(e) => return domain_error(command, input, e),
    };
    let f_coords = match poly::parse_int_list(f) {
        Ok(v) => v,
        Err(e) => return domain_error(command, input, e),
    };
    let d: Int = match d.parse() {
        Ok(d) => d,
        Err(_) => return domain_error(command, input, format!("bad integer `{d}`")),
    };
    if !d.is_positive() {
        return domain_error(command, input, "d must be positive".into());
    }
    match build_from_trace(&p, &f_coords, &d) {
        Ok(spec) => CommandOutput {
            command: command.into(),
            input,
            result: json!({
                "char_poly": spec.char_poly().to_string(),
                "initial_values": spec
                    .initial_values()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
            }),
            status: "ok",
            table: None,
            exit_code: 0,
        },
        Err(e) => domain_error(command, input, e.to_string()),
    }
}

fn verdict_json(v: &SquarenessVerdict) -> Value {
    match v {
        SquarenessVerdict::Square { witness } => json!({
            "status": "square",
            "witness": witness.to_string(),
            "witness_field": witness.field().defining_poly().to_string(),
        }),
        SquarenessVerdict::NotSquare { obstruction } => json!({
            "status": "not_square",
            "obstruction": obstruction.to_string(),
        }),
        SquarenessVerdict::Undecided { reason } => json!({
            "status": "undecided",
            "reason": reason,
        }),
    }
}

fn cmd_hyp_check(
    parg: &PolyArg,
    init: &str,
    force: bool,
    cap: usize,
    token: &CancelToken,
) -> CommandOutput {
    let command = "hyp check";
    let input = spec_input(parg, init);
    let spec = match parse_spec(parg, init) {
        Ok(s) => s,
        Err(e) => return domain_error(command, input, e),
    };
    if let Err(e) = spec.validate_pisot_type() {
        return domain_error(command, input, e.to_string());
    }
    match theorem_applicability(&spec, cap, force, token) {
        Ok(rep) => {
            let cap_limited = [&rep.nonsquare_f1, &rep.nonsquare_f1alpha]
                .iter()
                .any(|v| matches!(v, SquarenessVerdict::Undecided { reason } if reason.contains("cap")));
            CommandOutput {
                command: command.into(),
                input,
                result: json!({
                    "k": rep.k,
                    "alpha_is_unit": rep.alpha_is_unit,
                    "verdict": rep.verdict.to_string(),
                    "nonsquare_f1": verdict_json(&rep.nonsquare_f1),
                    "nonsquare_f1alpha": verdict_json(&rep.nonsquare_f1alpha),
                    "clause_citations": rep.clause_citations,
                }),
                status: if cap_limited { "undecided" } else { "ok" },
                table: None,
                exit_code: if cap_limited { 3 } else { 0 },
            }
        }
        Err(e) => {
            if token.is_cancelled() {
                return CommandOutput {
                    command: command.into(),
                    input,
                    result: json!({ "error": "cancelled by interrupt" }),
                    status: "undecided",
                    table: None,
                    exit_code: 3,
                };
            }
            domain_error(command, input, e.to_string())
        }
    }
}

fn cmd_triples(
    parg: &PolyArg,
    init: &str,
    c_max: u64,
    a_min: u64,
    budget_ms: u64,
) -> CommandOutput {
    let command = "search triples";
    let mut input = spec_input(parg, init);
    if let Value::Object(map) = &mut input {
        map.insert("c_max".into(), json!(c_max));
        map.insert("a_min".into(), json!(a_min));
    }
    let spec = match parse_spec(parg, init) {
        Ok(s) => s,
        Err(e) => return domain_error(command, input, e),
    };
    if c_max < 3 {
        return domain_error(command, input, "c_max must be >= 3".into());
    }
    if a_min != 1 && a_min != 2 {
        return domain_error(command, input, "a_min must be 1 or 2".into());
    }
    match find_triples(&spec, c_max, a_min, budget_ms) {
        Ok(hits) => {
            let rows: Vec<Vec<String>> = hits
                .iter()
                .map(|h| {
                    vec![
                        h.a.to_string(),
                        h.b.to_string(),
                        h.c.to_string(),
                        h.x.to_string(),
                        h.y.to_string(),
                        h.z.to_string(),
                    ]
                })
                .collect();
            let list: Vec<Value> = hits
                .iter()
                .map(|h| {
                    json!({
                        "a": h.a, "b": h.b, "c": h.c,
                        "x": h.x, "y": h.y, "z": h.z,
                    })
                })
                .collect();
            CommandOutput {
                command: command.into(),
                input,
                result: json!({ "count": hits.len(), "triples": list }),
                status: "ok",
                table: Some((vec!["a", "b", "c", "x", "y", "z"], rows)),
                exit_code: 0,
            }
        }
        Err(SearchError::FactorBudget {
            z,
            last_completed_z,
            cofactor,
        }) => CommandOutput {
            command: command.into(),
            input,
            result: json!({
                "error": "factorization budget exhausted",
                "z": z,
                "last_completed_z": last_completed_z,
                "cofactor": cofactor.to_string(),
            }),
            status: "budget-exhausted",
            table: None,
            exit_code: 3,
        },
        Err(e) => domain_error(command, input, e.to_string()),
    }
}

fn cmd_gcd_scan(parg: &PolyArg, init: &str, y_lo: u64, z_hi: u64) -> CommandOutput {
    let command = "search gcd-scan";
    let mut input = spec_input(parg, init);
    if let Value::Object(map) = &mut input {
        map.insert("y_lo".into(), json!(y_lo));
        map.insert("z_hi".into(), json!(z_hi));
    }
    let spec = match parse_spec(parg, init) {
        Ok(s) => s,
        Err(e) => return domain_error(command, input, e),
    };
    if z_hi <= y_lo {
        return domain_error(command, input, "need y_lo < z_hi".into());
    }
    if spec.validate_pisot_type().is_err()
        || spec.eval_range(y_lo, y_lo)[0] < Int::from(2)
    {
        return domain_error(
            command,
            input,
            "y_lo must start where the sequence has reached 2".into(),
        );
    }
    match gcd_scan(&spec, y_lo, z_hi) {
        Ok(rep) => {
            let rows: Vec<Vec<String>> = rep
                .records
                .iter()
                .map(|r| {
                    vec![
                        r.y.to_string(),
                        r.z.to_string(),
                        r.g.to_string(),
                        decimal_string(&r.ratio, RATIO_DIGITS),
                    ]
                })
                .collect();
            CommandOutput {
                command: command.into(),
                input,
                result: json!({
                    "kappa": rat_exact(&rep.kappa),
                    "max_ratio": decimal_string(&rep.max_ratio, RATIO_DIGITS),
                    "fitted_slack": decimal_string(&rep.fitted_slack, RATIO_DIGITS),
                    "records": rep.records.len(),
                }),
                status: "ok",
                table: Some((vec!["y", "z", "g", "ratio"], rows)),
                exit_code: 0,
            }
        }
        Err(e) => domain_error(command, input, e.to_string()),
    }
}

fn parse_pos_int(s: &str) -> Result<Int, String> {
    let v: Int = s.parse().map_err(|_| format!("bad integer `{s}`"))?;
    if !v.is_positive() {
        return Err(format!("`{s}` must be a positive integer"));
    }
    Ok(v)
}

fn cmd_euler(a: &str, b: &str) -> CommandOutput {
    let command = "quad euler";
    let input = json!({ "a": a, "b": b });
    let (a, b) = match (parse_pos_int(a), parse_pos_int(b)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return domain_error(command, input, e),
    };
    match euler_quadruple(&a, &b) {
        Ok(q) => CommandOutput {
            command: command.into(),
            input,
            result: json!({
                "quadruple": q.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            }),
            status: "ok",
            table: None,
            exit_code: 0,
        },
        Err(e) => domain_error(command, input, e.to_string()),
    }
}

fn cmd_dplus(a: &str, b: &str, c: &str) -> CommandOutput {
    let command = "quad dplus";
    let input = json!({ "a": a, "b": b, "c": c });
    let parsed = (parse_pos_int(a), parse_pos_int(b), parse_pos_int(c));
    let (a, b, c) = match parsed {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
            return domain_error(command, input, e)
        }
    };
    match dplus_extension(&a, &b, &c) {
        Ok(d) => CommandOutput {
            command: command.into(),
            input,
            result: json!({ "d_plus": d.to_string() }),
            status: "ok",
            table: None,
            exit_code: 0,
        },
        Err(e) => domain_error(command, input, e.to_string()),
    }
}
