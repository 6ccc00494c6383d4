use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::Instant;

use paley4::designs::{load_m11, non_tournament_example, two_graph_example, verify_two_graph};
use paley4::field::prime_power;
use paley4::hypergraph::{
    build_paley_hypergraph, check_de_caen, check_gamma, design_parameters, fingerprint,
    verify_span, HypergraphK, SpanMode,
};
use paley4::tournament::{
    baber_density, baber_hypergraph, extended_paley_tournament, odd_cycle_obstruction,
    paley_tournament, realize_as_tournament, switch, switching_equivalent, RealizeOutcome,
    Tournament, TournamentError,
};
use paley4::FieldSpec;

use crate::report::Report;
use crate::{Cli, CliError, Command, GlobalArgs, Kind, Outcome, VerifyArgs};

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn field(g: &GlobalArgs) -> Result<FieldSpec, CliError> {
    let modulus = g.modulus.as_deref();
    match (g.p, g.q) {
        (Some(p), None) => FieldSpec::new(p, g.ell.unwrap_or(1), modulus).map_err(input_err),
        (None, Some(q)) => {
            if g.ell.is_some() {
                return Err(input_err("--ell cannot be combined with --q"));
            }
            let (p, ell) =
                prime_power(q).ok_or_else(|| input_err(format!("{q} is not a prime power")))?;
            FieldSpec::new(p, ell, modulus).map_err(input_err)
        }
        (Some(_), Some(_)) => Err(input_err("give either --p or --q, not both")),
        (None, None) => Err(input_err(
            "this command needs a field: --p (with --ell, --modulus) or --q",
        )),
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(input_err)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn read_hypergraph(path: &Path) -> Result<HypergraphK, CliError> {
    HypergraphK::from_text(&read_input(path)?)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn read_tournament(path: &Path) -> Result<Tournament, CliError> {
    Tournament::from_text(&read_input(path)?)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))
}

struct Run<'a> {
    global: &'a GlobalArgs,
    report: Report,
    start: Instant,
    /// Data went to stdout, so the report goes to stderr.
    data_on_stdout: bool,
}

impl Run<'_> {
    fn emit(&mut self, text: &str) -> Result<(), CliError> {
        match &self.global.out {
            Some(path) => {
                fs::write(path, text).map_err(|e| input_err(format!("{}: {e}", path.display())))?;
                self.report.set("output", path.display().to_string());
            }
            None => {
                io::stdout().write_all(text.as_bytes()).map_err(input_err)?;
                self.data_on_stdout = true;
            }
        }
        Ok(())
    }

    fn finish(mut self, outcome: Outcome) -> Result<Outcome, CliError> {
        self.report.set(
            "status",
            match outcome {
                Outcome::Ok => "ok",
                Outcome::Violation => "violation",
            },
        );
        self.write_report(&self.report)?;
        Ok(outcome)
    }

    fn write_report(&self, report: &Report) -> Result<(), CliError> {
        let text = report.to_text(self.start.elapsed());
        if self.data_on_stdout {
            eprint!("{text}");
        } else {
            print!("{text}");
        }
        if let Some(path) = &self.global.report_out {
            fs::write(path, report.to_json())
                .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
        }
        Ok(())
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let name = match &cli.command {
        Command::Construct { .. } => "construct",
        Command::Verify(_) => "verify",
        Command::Baber { .. } => "baber",
        Command::Switch { .. } => "switch",
        Command::SwitchEquiv { .. } => "switch-equiv",
        Command::Realize { .. } => "realize",
        Command::Fingerprint { .. } => "fingerprint",
        Command::Density { .. } => "density",
    };
    let mut run = Run {
        global: &cli.global,
        report: Report::new(name),
        start: Instant::now(),
        data_on_stdout: false,
    };
    match &cli.command {
        Command::Construct { kind } => construct(run, *kind),
        Command::Verify(args) => verify(run, args),
        Command::Baber { input } => {
            let t = read_tournament(input)?;
            let h = baber_hypergraph(&t);
            run.report.set("input", input.display().to_string());
            run.report.set("input_digest", t.digest());
            describe_hypergraph(&mut run.report, &h);
            run.emit(&h.to_text())?;
            run.finish(Outcome::Ok)
        }
        Command::Switch { input, subset } => {
            let t = read_tournament(input)?;
            let s = switch(&t, subset).map_err(input_err)?;
            run.report.set("input", input.display().to_string());
            run.report.set("input_digest", t.digest());
            run.report.set_serialized("subset", subset);
            run.report.set("n", s.vertex_count());
            run.report.set("digest", s.digest());
            run.emit(&s.to_text())?;
            run.finish(Outcome::Ok)
        }
        Command::SwitchEquiv { first, second } => {
            let t1 = read_tournament(first)?;
            let t2 = read_tournament(second)?;
            run.report.set("first_digest", t1.digest());
            run.report.set("second_digest", t2.digest());
            let cert = switching_equivalent(&t1, &t2).map_err(input_err)?;
            run.report.set("equivalent", cert.is_some());
            run.report
                .set_serialized("certificate", &cert.as_ref().map(|c| &c.subset));
            run.finish(if cert.is_some() {
                Outcome::Ok
            } else {
                Outcome::Violation
            })
        }
        Command::Realize { input, budget } => realize(run, input, *budget),
        Command::Fingerprint { input } => {
            let h = read_hypergraph(input)?;
            run.report.set("input", input.display().to_string());
            run.report.set("input_digest", h.digest());
            let fp = fingerprint(&h).map_err(input_err)?;
            run.report.set_serialized("fingerprint", &fp);
            run.finish(Outcome::Ok)
        }
        Command::Density { n, trials, seed } => {
            if *trials == 0 {
                return Err(input_err("--trials must be positive"));
            }
            let d = baber_density(*n, *trials, *seed);
            run.report.set_serialized("density", &d);
            run.finish(Outcome::Ok)
        }
    }
}

fn describe_hypergraph(report: &mut Report, h: &HypergraphK) {
    report.set("n", h.vertex_count());
    report.set("k", h.uniformity());
    report.set("edges", h.edge_count());
    report.set("digest", h.digest());
}

fn describe_field(report: &mut Report, spec: &FieldSpec) {
    report.set_serialized(
        "field",
        &serde_json::json!({
            "p": spec.characteristic(),
            "ell": spec.degree(),
            "q": spec.order(),
            "modulus": spec.modulus(),
        }),
    );
}

fn construct(mut run: Run<'_>, kind: Kind) -> Result<Outcome, CliError> {
    let kind_name = match kind {
        Kind::PaleyHypergraph => "paley-hypergraph",
        Kind::PaleyTournament => "paley-tournament",
        Kind::ExtendedPaley => "extended-paley",
        Kind::M11 => "m11",
        Kind::TwoGraphExample => "two-graph-example",
        Kind::NonTournamentExample => "non-tournament-example",
    };
    run.report.set("kind", kind_name);
    let text = match kind {
        Kind::PaleyHypergraph => {
            let spec = field(run.global)?;
            describe_field(&mut run.report, &spec);
            let h = build_paley_hypergraph(&spec).map_err(input_err)?;
            describe_hypergraph(&mut run.report, &h);
            h.to_text()
        }
        Kind::PaleyTournament | Kind::ExtendedPaley => {
            let spec = field(run.global)?;
            describe_field(&mut run.report, &spec);
            let t = if kind == Kind::PaleyTournament {
                paley_tournament(&spec)
            } else {
                extended_paley_tournament(&spec)
            }
            .map_err(input_err)?;
            let n = t.vertex_count();
            run.report.set("n", n);
            run.report.set("pairs", n * n.saturating_sub(1) / 2);
            let sinks: Vec<usize> = (0..n).filter(|&v| t.out_degree(v) == 0).collect();
            run.report.set_serialized("sinks", &sinks);
            run.report.set("digest", t.digest());
            t.to_text()
        }
        Kind::M11 | Kind::TwoGraphExample | Kind::NonTournamentExample => {
            let h = match kind {
                Kind::M11 => load_m11(),
                Kind::TwoGraphExample => two_graph_example(),
                _ => non_tournament_example(),
            };
            describe_hypergraph(&mut run.report, &h);
            h.to_text()
        }
    };
    run.emit(&text)?;
    run.finish(Outcome::Ok)
}

fn verify(mut run: Run<'_>, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let h = read_hypergraph(&args.input)?;
    let k = h.uniformity();
    run.report.set("input", args.input.display().to_string());
    run.report.set("input_digest", h.digest());
    run.report.set("n", h.vertex_count());
    run.report.set("k", k);
    run.report.set("edges", h.edge_count());

    let any = args.zero_or_two
        || args.at_most_two
        || args.design.is_some()
        || args.de_caen
        || args.two_graph
        || args.gamma;
    let (zero_or_two, design, de_caen, two_graph) = if any {
        (args.zero_or_two, args.design, args.de_caen, args.two_graph)
    } else if k == 3 {
        (false, None, false, true)
    } else {
        (true, k.checked_sub(1).filter(|&t| t > 0), k >= 2, false)
    };

    let mut ok = true;
    for (flag, mode, key) in [
        (zero_or_two, SpanMode::ZeroOrTwo, "zero_or_two"),
        (args.at_most_two, SpanMode::AtMostTwo, "at_most_two"),
    ] {
        if flag {
            let r = verify_span(&h, mode);
            ok &= r.ok;
            run.report.set_serialized(key, &r);
        }
    }
    if let Some(t) = design {
        let r = design_parameters(&h, t).map_err(input_err)?;
        ok &= r.is_design;
        run.report.set_serialized("design", &r);
    }
    if de_caen {
        let r = check_de_caen(&h).map_err(input_err)?;
        ok &= r.ok;
        run.report.set_serialized("de_caen", &r);
    }
    if two_graph {
        let r = verify_two_graph(&h).map_err(input_err)?;
        ok &= r.ok;
        run.report.set_serialized("two_graph", &r);
    }
    if args.gamma {
        let r = check_gamma(&h);
        ok &= r.ok;
        run.report.set_serialized("gamma", &r);
    }
    run.finish(if ok { Outcome::Ok } else { Outcome::Violation })
}

fn realize(mut run: Run<'_>, input: &Path, budget: u64) -> Result<Outcome, CliError> {
    let h = read_hypergraph(input)?;
    run.report.set("input", input.display().to_string());
    run.report.set("input_digest", h.digest());
    run.report.set("budget", budget);
    let obstruction = odd_cycle_obstruction(&h).map_err(input_err)?;
    run.report
        .set_serialized("odd_cycle_obstruction", &obstruction);
    match realize_as_tournament(&h, budget) {
        Ok(RealizeOutcome::Witness { tournament, nodes }) => {
            run.report.set("outcome", "witness");
            run.report.set("nodes", nodes);
            run.report.set("witness_digest", tournament.digest());
            run.emit(&tournament.to_text())?;
            run.finish(Outcome::Ok)
        }
        Ok(RealizeOutcome::Unrealizable { nodes }) => {
            run.report.set("outcome", "unrealizable");
            run.report.set("nodes", nodes);
            run.finish(Outcome::Violation)
        }
        Err(TournamentError::BudgetExceeded { nodes }) => {
            run.report.set("outcome", "budget-exceeded");
            run.report.set("nodes", nodes);
            run.report.set("status", "budget-exceeded");
            run.write_report(&run.report)?;
            Err(CliError::Budget { nodes })
        }
        Err(e) => Err(input_err(e)),
    }
}
