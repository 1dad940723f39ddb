//! `hdl` — command-line front end for the Hurwitz divisor computations.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
//! 3 resource guard exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed};

use hdl_core::exactcomb::{
    self, catalan_n, e0_degree_normalized, factorial, rational_to_string,
    restricted_degree_normalized, Rational,
};
use hdl_core::picard::{self, BoundaryProfile, DivisorClass};
use hdl_core::symcover::{self, CycleType, Permutation};
use hdl_core::{braid, Error, ResourceGuard};

#[derive(Parser)]
#[command(
    name = "hdl",
    version,
    about = "Exact Hurwitz divisor classes on moduli of even-genus curves",
    after_help = "Environment: HDL_NODE_CEILING overrides the enumeration guards."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficient vector of a Hurwitz divisor class.
    Class {
        /// Genus parameter (the genus is 2k).
        #[arg(long)]
        k: u64,
        /// Which divisor class to compute.
        #[arg(long)]
        divisor: Divisor,
        /// Computation route for d2 (d3 always uses its closed form).
        #[arg(long, default_value = "theorem")]
        method: Method,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Run the verification suites and report per-check results.
    Verify {
        /// Largest k the swept identities are checked at.
        #[arg(long = "k-max", default_value_t = 10)]
        k_max: u64,
        #[arg(long, default_value = "all")]
        suite: Suite,
    },
    /// Partition a transposition-tuple set into braid or pure-braid orbits.
    Orbit {
        /// Degree of the covers (letters of the symmetric group).
        #[arg(long)]
        d: usize,
        /// Tuple length (number of simple branch points).
        #[arg(long)]
        b: usize,
        /// Product permutation in cycle notation, e.g. "(1 2 3)".
        #[arg(long)]
        phi: String,
        /// Generator family to close under.
        #[arg(long)]
        group: Group,
        /// Also identify tuples conjugate under the centralizer of phi.
        #[arg(long)]
        quotient: bool,
        /// Worker threads; the report is identical for any value.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value = "json")]
        format: Format,
    },
    /// Count covers with the given simple branching and extra profile.
    Hurwitz {
        /// Degree of the covers.
        #[arg(long)]
        d: usize,
        /// Number of simple branch points.
        #[arg(long)]
        simple: usize,
        /// Ramification over the extra point as a comma list, e.g. "3"
        /// or "2,2"; short lists are padded with 1s. Defaults to no
        /// extra ramification.
        #[arg(long)]
        extra: Option<String>,
    },
    /// Tabulate the normalized boundary-restriction degrees.
    Degrees {
        #[arg(long)]
        k: u64,
        /// Report raw degrees (multiplied by (6k)!) instead of
        /// normalized ones.
        #[arg(long)]
        raw: bool,
        #[arg(long, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Divisor {
    D2,
    D3,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Theorem,
    Pipeline,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Identities,
    Classes,
    Orbits,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    /// Pure braid group.
    Pure,
    /// Full braid group.
    Braid,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceExceeded(_) => 3,
        _ => 2,
    }
}

fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Class { k, divisor, method, format } => cmd_class(k, divisor, method, format),
        Command::Verify { k_max, suite } => return cmd_verify(k_max, suite),
        Command::Orbit { d, b, phi, group, quotient, threads, format } => {
            cmd_orbit(d, b, &phi, group, quotient, threads, format)
        }
        Command::Hurwitz { d, simple, extra } => cmd_hurwitz(d, simple, extra.as_deref()),
        Command::Degrees { k, raw, format } => cmd_degrees(k, raw, format),
    };
    match result {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn cmd_class(k: u64, divisor: Divisor, method: Method, format: Format) -> hdl_core::Result<()> {
    let class = match (divisor, method) {
        (Divisor::D2, Method::Theorem) => picard::d2_class_theorem(k)?,
        (Divisor::D2, Method::Pipeline) => picard::d2_class_pipeline(k)?,
        (Divisor::D3, _) => picard::d3_class(k)?,
    };
    match format {
        Format::Json => println!("{}", class.to_json_string()),
        Format::Csv => print!("{}", class_csv(&class)),
        Format::Latex => println!("{}", class_latex(&class)),
    }
    Ok(())
}

fn class_csv(class: &DivisorClass) -> String {
    let mut out = String::from("coefficient,value\n");
    out.push_str(&format!("lambda,{}\n", rational_to_string(class.c_lambda())));
    for (j, c) in class.deltas().iter().enumerate() {
        out.push_str(&format!("delta_{j},{}\n", rational_to_string(c)));
    }
    out
}

fn latex_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        let sign = if r.numer().sign() == num_bigint::Sign::Minus { "-" } else { "" };
        format!(
            "{sign}\\frac{{{}}}{{{}}}",
            r.numer().magnitude(),
            r.denom()
        )
    }
}

fn class_latex(class: &DivisorClass) -> String {
    let mut out = format!("{}\\lambda", latex_rational(class.c_lambda()));
    for (j, c) in class.deltas().iter().enumerate() {
        let rendered = latex_rational(&c.abs());
        let sign = if exactcomb::sign(c) < 0 { "-" } else { "+" };
        out.push_str(&format!(" {sign} {rendered}\\delta_{{{j}}}"));
    }
    out
}

fn cmd_orbit(
    d: usize,
    b: usize,
    phi_str: &str,
    group: Group,
    quotient: bool,
    threads: usize,
    format: Format,
) -> hdl_core::Result<()> {
    let phi = Permutation::parse_cycles(d, phi_str)?;
    let generators = match group {
        Group::Pure => braid::GeneratorSet::PureBraid,
        Group::Braid => braid::GeneratorSet::FullBraid,
    };
    let guard = ResourceGuard::from_env();
    let options = braid::OrbitOptions { quotient, threads: threads.max(1) };
    let report = braid::orbits_with(d, b, &phi, generators, options, None, &guard)?;
    match format {
        Format::Json => println!("{}", report.to_json_string()),
        Format::Csv => print!("{}", orbit_csv(&report)),
        Format::Latex => print!("{}", orbit_latex(&report)),
    }
    Ok(())
}

fn orbit_fields(report: &braid::OrbitReport) -> Vec<(&'static str, String)> {
    let sizes = report
        .orbit_sizes
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(";");
    vec![
        ("d", report.d.to_string()),
        ("b", report.b.to_string()),
        ("phi", report.phi.clone()),
        ("phi_type", report.phi_type.clone()),
        ("generators", report.generators.to_string()),
        ("quotient", report.quotient.to_string()),
        ("total_tuples", report.total_tuples.to_string()),
        ("orbit_count", report.orbit_count.to_string()),
        ("orbit_sizes", sizes),
        ("transitive", report.transitive.to_string()),
        (
            "sigma0_in_unique_orbit",
            match report.sigma0_in_unique_orbit {
                Some(v) => v.to_string(),
                None => "null".to_string(),
            },
        ),
        ("nodes_visited", report.nodes_visited.to_string()),
        ("edges_applied", report.edges_applied.to_string()),
    ]
}

fn orbit_csv(report: &braid::OrbitReport) -> String {
    let mut out = String::from("key,value\n");
    for (key, value) in orbit_fields(report) {
        out.push_str(&format!("{key},{value}\n"));
    }
    out
}

fn orbit_latex(report: &braid::OrbitReport) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    for (key, value) in orbit_fields(report) {
        out.push_str(&format!("{} & {}\\\\\n", key.replace('_', "\\_"), value));
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn cmd_hurwitz(d: usize, simple: usize, extra: Option<&str>) -> hdl_core::Result<()> {
    let mu = match extra {
        None => CycleType::new(vec![1; d])?,
        Some(s) => {
            let given: CycleType = s.parse()?;
            let total: usize = given.parts().iter().sum();
            if total > d {
                return Err(Error::Parse(format!(
                    "partition {given} exceeds the degree {d}"
                )));
            }
            let mut parts = given.parts().to_vec();
            parts.extend(std::iter::repeat_n(1, d - total));
            CycleType::new(parts)?
        }
    };
    let guard = ResourceGuard::from_env();
    let count = symcover::count_covers(d, simple, &mu, &guard)?;
    println!("{count}");
    Ok(())
}

fn cmd_degrees(k: u64, raw: bool, format: Format) -> hdl_core::Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("degrees requires k >= 1".into()));
    }
    let scale = if raw {
        Rational::from_integer(factorial(6 * k))
    } else {
        Rational::one()
    };
    // Rows are (j, c, degree, per-j sum); E_0 is the single j = 0 row.
    let mut rows: Vec<(u64, u64, Rational, Rational)> = Vec::new();
    let e0 = e0_degree_normalized(k)? * &scale;
    rows.push((0, 0, e0.clone(), e0));
    for j in 1..=k {
        let degrees: Vec<Rational> = (0..=(j / 2))
            .map(|c| restricted_degree_normalized(k, j, c).map(|r| r * &scale))
            .collect::<hdl_core::Result<_>>()?;
        let sum: Rational = degrees.iter().sum();
        for (c, degree) in degrees.into_iter().enumerate() {
            rows.push((j, c as u64, degree, sum.clone()));
        }
    }
    let catalan = Rational::from_integer(catalan_n(k)?) * &scale;

    match format {
        Format::Json => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|(j, c, degree, sum)| {
                    serde_json::json!({
                        "j": j,
                        "c": c,
                        "degree": rational_to_string(degree),
                        "j_sum": rational_to_string(sum),
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "k": k,
                "normalized": !raw,
                "catalan": rational_to_string(&catalan),
                "rows": rows_json,
            });
            println!("{doc}");
        }
        Format::Csv => {
            println!("j,c,degree,j_sum");
            for (j, c, degree, sum) in &rows {
                println!(
                    "{j},{c},{},{}",
                    rational_to_string(degree),
                    rational_to_string(sum)
                );
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{rrrr}}");
            println!("j & c & degree & sum\\\\");
            for (j, c, degree, sum) in &rows {
                println!("{j} & {c} & {} & {}\\\\", latex_rational(degree), latex_rational(sum));
            }
            println!("\\end{{tabular}}");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct Verifier {
    failures: u64,
    checks: u64,
}

impl Verifier {
    fn new() -> Self {
        Verifier { failures: 0, checks: 0 }
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if ok {
            println!("ok   {name}");
        } else {
            self.failures += 1;
            println!("FAIL {name}: {}", detail());
        }
    }

    fn error(&mut self, name: &str, err: &Error) {
        self.checks += 1;
        self.failures += 1;
        println!("FAIL {name}: {err}");
    }
}

fn cmd_verify(k_max: u64, suite: Suite) -> i32 {
    if k_max < 2 {
        eprintln!("error: verify requires --k-max >= 2");
        return 2;
    }
    let mut v = Verifier::new();
    let outcome = match suite {
        Suite::Identities => verify_identities(&mut v, k_max),
        Suite::Classes => verify_classes(&mut v, k_max),
        Suite::Orbits => verify_orbits(&mut v),
        Suite::All => verify_identities(&mut v, k_max)
            .and_then(|_| verify_classes(&mut v, k_max))
            .and_then(|_| verify_orbits(&mut v)),
    };
    if let Err(err) = outcome {
        eprintln!("error: {err}");
        return exit_code(&err);
    }
    println!(
        "{} checks, {} failures",
        v.checks, v.failures
    );
    if v.failures > 0 {
        1
    } else {
        0
    }
}

fn verify_identities(v: &mut Verifier, k_max: u64) -> hdl_core::Result<()> {
    use exactcomb::{binomial, int, rat, rat_int};
    use num_integer::Integer as _;
    use num_traits::Zero;

    for k in 1..=k_max {
        let n = catalan_n(k)?;
        let (alt, rem) = binomial(2 * k, k as i64).div_rem(&int(k as i64 + 1));
        v.check(
            &format!("identities/catalan-dual-form k={k}"),
            rem.is_zero() && alt == n,
            || format!("C(2k,k+1)/k = {n} but C(2k,k)/(k+1) = {alt} rem {rem}"),
        );
    }

    for k in 1..=k_max {
        let n = Rational::from_integer(catalan_n(k)?);
        for j in 1..=k {
            let a2 = exactcomb::moment_a(k, j, 2)?;
            v.check(
                &format!("identities/moment-a2 k={k} j={j}"),
                a2 == n,
                || format!("A_2 = {} expected N = {}", rational_to_string(&a2), rational_to_string(&n)),
            );
            let a3 = exactcomb::moment_a(k, j, 3)?;
            let al = exactcomb::alpha(k, j)?;
            v.check(
                &format!("identities/moment-a3-alpha k={k} j={j}"),
                a3 == al,
                || format!("A_3 = {} expected alpha = {}", rational_to_string(&a3), rational_to_string(&al)),
            );
            let a4 = exactcomb::moment_a(k, j, 4)?;
            let expect = (rat_int(1) + rat(3 * (j * (2 * k - j)) as i64, (2 * k - 1) as i64)) * &n;
            v.check(
                &format!("identities/moment-a4 k={k} j={j}"),
                a4 == expect,
                || format!("A_4 = {} expected {}", rational_to_string(&a4), rational_to_string(&expect)),
            );
            let sum: Rational = (0..=(j / 2))
                .map(|c| restricted_degree_normalized(k, j, c))
                .collect::<hdl_core::Result<Vec<_>>>()?
                .into_iter()
                .sum();
            v.check(
                &format!("identities/degree-sum k={k} j={j}"),
                sum == n,
                || format!("sum = {} expected N = {}", rational_to_string(&sum), rational_to_string(&n)),
            );
        }
    }

    for k in 1..=k_max {
        let h = exactcomb::harris_pencil_counts(k)?;
        let k_i = k as i64;
        let ok = h.b == int(12 * (k_i - 1)) * &h.a
            && h.c == int(5 * (k_i - 1)) * &h.a
            && h.d == int(12 * (k_i - 1) * (k_i - 2)) * &h.a;
        v.check(
            &format!("identities/harris-count-ratios k={k}"),
            ok,
            || format!("(a,b,c,d) = ({},{},{},{})", h.a, h.b, h.c, h.d),
        );
    }

    for k in 3..=k_max.max(3) {
        match exactcomb::general_position_inequalities(k) {
            Ok(ok) => v.check(
                &format!("identities/general-position k={k}"),
                ok,
                || "counting inequalities failed".to_string(),
            ),
            Err(err) => v.error(&format!("identities/general-position k={k}"), &err),
        }
    }

    for k in 1..=k_max {
        let rho = exactcomb::brill_noether_rho(2 * k, 1, k + 1);
        v.check(
            &format!("identities/brill-noether-zero k={k}"),
            rho == int(0),
            || format!("rho = {rho}"),
        );
    }
    Ok(())
}

fn verify_classes(v: &mut Verifier, k_max: u64) -> hdl_core::Result<()> {
    use exactcomb::{rat, rat_int};

    let zero2 = picard::d2_class_theorem(2)?;
    v.check("classes/k2-theorem-vanishes", zero2.is_zero(), || {
        zero2.to_json_string()
    });
    let zero2p = picard::d2_class_pipeline(2)?;
    v.check("classes/k2-pipeline-vanishes", zero2p.is_zero(), || {
        zero2p.to_json_string()
    });

    for k in 2..=k_max {
        let theorem = picard::d2_class_theorem(k)?;
        let pipeline = picard::d2_class_pipeline(k)?;
        v.check(
            &format!("classes/pipeline-equals-theorem k={k}"),
            theorem == pipeline,
            || format!("theorem {} pipeline {}", theorem.to_json_string(), pipeline.to_json_string()),
        );
    }

    for k in 1..=k_max {
        let cls = picard::d2_class_theorem(k)?;
        let rel = picard::harris_relation(&cls);
        v.check(
            &format!("classes/harris-relation k={k}"),
            rel == rat_int(0),
            || format!("c_lambda + 12c_0 - c_1 = {}", rational_to_string(&rel)),
        );
        let pairing = picard::test_curve_pairing(&cls);
        let k_i = k as i64;
        let expect = rat_int(2 * (k_i - 1) * (k_i - 2) * (6 * k_i + 5))
            * Rational::from_integer(catalan_n(k)?);
        v.check(
            &format!("classes/test-curve-pairing k={k}"),
            pairing == expect,
            || format!("pairing = {} expected {}", rational_to_string(&pairing), rational_to_string(&expect)),
        );
    }

    let k1 = picard::d2_class_theorem(1)?;
    let reference = DivisorClass::new(1, rat_int(10), vec![rat_int(-1), rat_int(-2)])?;
    let ratio = picard::proportional_to(&k1, &reference)?;
    v.check(
        "classes/k1-proportional-to-(10,-1,-2)",
        ratio == Some(rat_int(-12)),
        || format!("ratio = {ratio:?}"),
    );
    println!(
        "note classes/k1: class is -12*(10,-1,-2), i.e. the delta_1 coefficient \
         of the genus-2 relation carries weight 2"
    );

    for k in 2..=k_max {
        // d3_class evaluates both printed forms and asserts they agree.
        let d3 = picard::d3_class(k)?;
        v.check(
            &format!("classes/d3-forms-agree k={k}"),
            d3.c_lambda() == &(rat_int(3) * Rational::from_integer(catalan_n(k)?)
                * rat(2 * (k as i64 + 4) * (6 * k as i64 - 1), 2 * k as i64 - 1)),
            || d3.to_json_string(),
        );
    }

    for k in 2..=k_max {
        let k_i = k as i64;
        let e0 = picard::kkz_coefficient(k, &BoundaryProfile::e0(k)?)?;
        v.check(
            &format!("classes/kkz-e0 k={k}"),
            e0 == rat(3 * k_i - 1, 2 * (6 * k_i - 1)),
            || rational_to_string(&e0),
        );
        let e2 = if k >= 3 {
            picard::kkz_coefficient(k, &BoundaryProfile::e2(k)?)?
        } else {
            picard::kkz_coefficient_raw(k, 6 * k - 2, 2, &rat_int(k_i - 2))
        };
        v.check(
            &format!("classes/kkz-e2 k={k}"),
            e2 == rat(-1, 2 * (6 * k_i - 1)),
            || rational_to_string(&e2),
        );
        let e3 = picard::kkz_coefficient(k, &BoundaryProfile::e3(k)?)?;
        v.check(
            &format!("classes/kkz-e3 k={k}"),
            e3 == rat(3 * k_i - 5, 6 * (6 * k_i - 1)),
            || rational_to_string(&e3),
        );
        for j in 1..=k {
            for c in 0..=(j / 2) {
                let got = picard::kkz_coefficient(k, &BoundaryProfile::ejc(k, j, c)?)?;
                let m = (j + 1 - 2 * c) as i64;
                let j_i = j as i64;
                let expect = rat_int(m)
                    * (rat(3 * j_i * (6 * k_i - 3 * j_i), 8 * (6 * k_i - 1))
                        - rat(1, 12) * (rat_int(m) - rat(1, m)));
                v.check(
                    &format!("classes/kkz-ejc k={k} j={j} c={c}"),
                    got == expect,
                    || format!("got {} expected {}", rational_to_string(&got), rational_to_string(&expect)),
                );
            }
        }
    }
    Ok(())
}

fn verify_orbits(v: &mut Verifier) -> hdl_core::Result<()> {
    let guard = ResourceGuard::from_env();

    let mu3 = CycleType::new(vec![3])?;
    let count = symcover::count_covers(3, 2, &mu3, &guard)?;
    v.check("orbits/hurwitz-count d=3", count == 1, || count.to_string());
    let mu11 = CycleType::new(vec![1, 1])?;
    let count = symcover::count_covers(2, 2, &mu11, &guard)?;
    v.check("orbits/hurwitz-count d=2", count == 1, || count.to_string());

    let cases: [(usize, usize, CycleType); 4] = [
        (3, 2, CycleType::new(vec![3])?),
        (3, 4, CycleType::new(vec![3])?),
        (4, 4, CycleType::new(vec![2, 2])?),
        (4, 6, CycleType::new(vec![3, 1])?),
    ];
    for (d, b, mu) in &cases {
        let phi = mu.canonical_rep();
        let full = braid::orbits(*d, *b, &phi, braid::GeneratorSet::FullBraid, &guard)?;
        v.check(
            &format!("orbits/full-braid-transitive d={d} b={b} mu={mu}"),
            full.transitive,
            || full.to_json_string(),
        );
        let pure = braid::certify_pure_braid_transitivity(*d, *b, mu, &guard)?;
        v.check(
            &format!("orbits/pure-braid-transitive d={d} b={b} mu={mu}"),
            pure.transitive && pure.sigma0_in_unique_orbit == Some(true),
            || pure.to_json_string(),
        );
        v.check(
            &format!("orbits/orbit-counts-ordered d={d} b={b} mu={mu}"),
            pure.orbit_count >= full.orbit_count,
            || format!("pure {} < full {}", pure.orbit_count, full.orbit_count),
        );
    }

    let mu = CycleType::new(vec![3])?;
    let phi = mu.canonical_rep();
    let single = braid::orbits_with(
        3,
        4,
        &phi,
        braid::GeneratorSet::PureBraid,
        braid::OrbitOptions { quotient: false, threads: 1 },
        None,
        &guard,
    )?;
    let multi = braid::orbits_with(
        3,
        4,
        &phi,
        braid::GeneratorSet::PureBraid,
        braid::OrbitOptions { quotient: false, threads: 2 },
        None,
        &guard,
    )?;
    v.check(
        "orbits/deterministic-across-threads",
        single.to_json_string() == multi.to_json_string(),
        || format!("1 thread: {}\n2 threads: {}", single.to_json_string(), multi.to_json_string()),
    );

    for (variant, d, b) in [
        (symcover::Sigma0Variant::Triple, 3, 2),
        (symcover::Sigma0Variant::Triple, 4, 4),
        (symcover::Sigma0Variant::TwoTwo, 4, 4),
        (symcover::Sigma0Variant::TwoTwo, 5, 8),
    ] {
        match symcover::build_sigma0(variant, d, b) {
            Ok(sigma) => v.check(
                &format!("orbits/sigma0-well-formed {variant:?} d={d} b={b}"),
                sigma.is_generating(),
                || format!("{sigma:?}"),
            ),
            Err(err) => v.error(&format!("orbits/sigma0-well-formed {variant:?} d={d} b={b}"), &err),
        }
    }
    Ok(())
}
