use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use weierstrass_ext::cohomology::pushforward_summands;
use weierstrass_ext::extendability::numerical::gaussian_section_class;
use weierstrass_ext::extendability::{
    cor_nonextweier_verdict, k3_enumerate, k3_verdicts, nonextweier2_verdict, numerical_conditions,
    prop_numerical_check, K3Mode, K3Triple,
};
use weierstrass_ext::report::{full_report, k3_rows, pair_rows, render_markdown, Report};
use weierstrass_ext::scroll::check_scroll_hypotheses;
use weierstrass_ext::{
    compute_invariants, general_member_gonality, riemann_roch_chi, surface_h, verify_scroll_claims, DivisorClass,
    Error, GenericityPolicy, GonalityStatus, Rule, SurfaceData,
};

/// Extendability checks for smooth Weierstrass elliptic surfaces.
#[derive(Parser)]
#[command(name = "wext", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Policy {
    /// Report ranges wherever the answer depends on more than degrees.
    Exact,
    /// Assume general twists.
    Generic,
}

impl From<Policy> for GenericityPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Exact => GenericityPolicy::RequireExact,
            Policy::Generic => GenericityPolicy::AssumeGeneric,
        }
    }
}

#[derive(Args)]
struct Surface {
    /// Genus of the base curve.
    #[arg(long)]
    g: u32,
    /// Degree of the fundamental line bundle.
    #[arg(long)]
    n: u32,
}

impl Surface {
    fn data(&self) -> SurfaceData {
        SurfaceData::new(self.g, self.n)
    }
}

#[derive(Args)]
struct Hyperplane {
    /// Coefficient of the section class C in H.
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    /// Coefficient of the fiber class f in H.
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Hodge numbers and Kodaira dimension.
    Invariants {
        #[command(flatten)]
        surface: Surface,
    },
    /// h^0, h^1, h^2 of the class alpha·C + beta·f.
    Cohomology {
        #[command(flatten)]
        surface: Surface,
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, allow_hyphen_values = true)]
        beta: i64,
        #[arg(long, value_enum, default_value_t = Policy::Generic)]
        policy: Policy,
    },
    /// Every extendability verdict for the hyperplane class aC + bf.
    Verdict {
        #[command(flatten)]
        surface: Surface,
        #[command(flatten)]
        h: Hyperplane,
        /// The embedding is linearly normal.
        #[arg(long)]
        linearly_normal: bool,
        #[arg(long, value_enum, default_value_t = Policy::Generic)]
        policy: Policy,
    },
    /// The Gaussian-map conditions for H = aC + bf and D0 = alpha·C + beta·f.
    Numerical {
        #[command(flatten)]
        surface: Surface,
        #[command(flatten)]
        h: Hyperplane,
        /// D0 coefficients; defaults to the class used by `verdict`.
        #[arg(long, allow_hyphen_values = true, requires = "beta")]
        alpha: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "alpha")]
        beta: Option<i64>,
        /// Gonality of a general member of |D0|; derived when omitted.
        #[arg(long, value_enum)]
        gonality: Option<GonalityStatus>,
        #[arg(long)]
        linearly_normal: bool,
    },
    /// K3 triples (a, b, g) not excluded in the given mode.
    EnumerateK3 {
        #[arg(long, value_enum)]
        mode: K3Mode,
    },
    /// Admissible (a, C·f) pairs for Del Pezzo fibered extensions.
    FibraPairs {
        #[arg(long)]
        locally_factorial: bool,
    },
    /// The scroll vanishings behind H^1(T_S(-1)) = 0.
    ScrollCheck {
        #[command(flatten)]
        surface: Surface,
        #[command(flatten)]
        h: Hyperplane,
        #[arg(long, value_enum, default_value_t = Policy::Generic)]
        policy: Policy,
    },
    /// All classification lists in one markdown document.
    Report,
}

fn cmd_invariants(s: SurfaceData) -> Result<Report, Error> {
    let mut r = Report::new("invariants").input("g", s.g).input("n", s.n);
    r.invariants = Some(compute_invariants(s)?);
    Ok(r)
}

fn cmd_cohomology(s: SurfaceData, d: DivisorClass, policy: GenericityPolicy) -> Result<Report, Error> {
    let mut r = Report::new("cohomology")
        .input("g", s.g)
        .input("n", s.n)
        .input("alpha", d.alpha)
        .input("beta", d.beta);
    r.policy = Some(policy);
    for q in 0..=2u8 {
        r.cohomology.push(weierstrass_ext::scroll::CohomologyTerm {
            space: format!("H^{q}(S, {d})"),
            answer: surface_h(d, s, q, policy)?,
        });
    }
    let summands = if d.alpha >= 0 {
        pushforward_summands(d, s)?
    } else {
        Vec::new()
    };
    r.list(
        "riemann-roch",
        vec![json!({ "chi": riemann_roch_chi(d, s)?, "pushforward_summands": summands })],
    );
    Ok(r)
}

fn triple_note(t: K3Triple) -> String {
    let entry = |label: &str, mode| {
        let list = k3_enumerate(mode);
        let status = if list.contains(&t) { "member" } else { "not a member" };
        format!("{label} list ({} triples) {status}", list.len())
    };
    format!(
        "{t}: {}, {}, {}",
        entry("normal", K3Mode::Normal),
        entry("l.c.i.", K3Mode::Lci),
        entry("terminal l.c.i.", K3Mode::LciTerminal)
    )
}

fn cmd_verdict(
    s: SurfaceData,
    a: i64,
    b: i64,
    linearly_normal: bool,
    policy: GenericityPolicy,
) -> Result<Report, Error> {
    let mut r = Report::new("verdict")
        .input("g", s.g)
        .input("n", s.n)
        .input("a", a)
        .input("b", b)
        .input("linearly_normal", linearly_normal);
    r.policy = Some(policy);
    let main = nonextweier2_verdict(s, a, b, linearly_normal)?;
    if main.rule == Some(Rule::ScrollTangent) && policy == GenericityPolicy::RequireExact {
        let exact = verify_scroll_claims(s, a, b, policy)?;
        if !exact.tangent_h1_vanishes {
            r.notes
                .push("the scroll vanishings hold for a general twist only".into());
        }
    }
    r.verdicts.push(main);
    if s == SurfaceData::RATIONAL {
        r.notes.push("no Picard-rank-two verdict for (g, n) = (0, 1)".into());
    } else {
        r.verdicts.push(cor_nonextweier_verdict(s)?);
        r.notes.push("Picard-rank-two verdicts assume ρ(S) = 2".into());
    }
    if s == SurfaceData::K3 {
        r.verdicts.extend(k3_verdicts(a, b));
        let genus = a * (b - a) + 1;
        r.notes.push(triple_note(K3Triple { a, b, genus }));
    }
    Ok(r)
}

fn cmd_numerical(
    s: SurfaceData,
    a: i64,
    b: i64,
    d0: Option<DivisorClass>,
    gonality: Option<GonalityStatus>,
    linearly_normal: bool,
) -> Result<Report, Error> {
    s.require_fibration()?;
    let d0 = d0.unwrap_or_else(|| gaussian_section_class(s));
    let gonality = gonality.unwrap_or_else(|| general_member_gonality(d0, s));
    let mut r = Report::new("numerical")
        .input("g", s.g)
        .input("n", s.n)
        .input("a", a)
        .input("b", b)
        .input("alpha", d0.alpha)
        .input("beta", d0.beta)
        .input("gonality", gonality)
        .input("linearly_normal", linearly_normal);
    r.verdicts
        .push(prop_numerical_check(s, a, b, d0, gonality, linearly_normal)?);
    r.numerical = Some(numerical_conditions(s, a, b, d0, gonality)?);
    Ok(r)
}

fn cmd_enumerate_k3(mode: K3Mode) -> Report {
    let mut r = Report::new("enumerate-k3").input("mode", mode);
    r.list("triples", k3_rows(mode));
    r
}

fn cmd_fibra_pairs(locally_factorial: bool) -> Report {
    let mut r = Report::new("fibra-pairs").input("locally_factorial", locally_factorial);
    r.list("pairs", pair_rows(locally_factorial));
    r
}

fn cmd_scroll_check(s: SurfaceData, a: i64, b: i64, policy: GenericityPolicy) -> Result<Report, Error> {
    let mut r = Report::new("scroll-check")
        .input("g", s.g)
        .input("n", s.n)
        .input("a", a)
        .input("b", b);
    r.policy = Some(policy);
    check_scroll_hypotheses(s, a, b)?;
    r.claims = Some(verify_scroll_claims(s, a, b, policy)?);
    Ok(r)
}

fn run(cli: &Cli) -> Result<String, Error> {
    let report = match &cli.command {
        Command::Invariants { surface } => cmd_invariants(surface.data())?,
        Command::Cohomology {
            surface,
            alpha,
            beta,
            policy,
        } => cmd_cohomology(surface.data(), DivisorClass::new(*alpha, *beta), (*policy).into())?,
        Command::Verdict {
            surface,
            h,
            linearly_normal,
            policy,
        } => cmd_verdict(surface.data(), h.a, h.b, *linearly_normal, (*policy).into())?,
        Command::Numerical {
            surface,
            h,
            alpha,
            beta,
            gonality,
            linearly_normal,
        } => {
            let d0 = alpha.zip(*beta).map(|(x, y)| DivisorClass::new(x, y));
            cmd_numerical(surface.data(), h.a, h.b, d0, *gonality, *linearly_normal)?
        }
        Command::EnumerateK3 { mode } => cmd_enumerate_k3(*mode),
        Command::FibraPairs { locally_factorial } => cmd_fibra_pairs(*locally_factorial),
        Command::ScrollCheck { surface, h, policy } => cmd_scroll_check(surface.data(), h.a, h.b, (*policy).into())?,
        Command::Report => {
            let r = full_report();
            return Ok(match cli.format {
                Format::Json => r.to_json_string(),
                Format::Table => render_markdown(&r),
            });
        }
    };
    Ok(match cli.format {
        Format::Json => report.to_json_string(),
        Format::Table => report.to_table(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let text = match std::panic::catch_unwind(|| run(&cli)) {
        Ok(Ok(text)) => text,
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(_) => return ExitCode::from(1),
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::SUCCESS
}
