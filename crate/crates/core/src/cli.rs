//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails (a one-line JSON
//! report goes to stdout), 2 on usage errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::design::{
    orbit_design, tactical_decomposition, verify_2design, verify_flag_transitive, Design, DesignError,
    DesignExport, Provenance,
};
use crate::geometry::{LineKind, Plane};
use crate::iso::{are_isomorphic, automorphism_group, canonical_form, pair_invariants};
use crate::perm::{format_generators, parse_generators, PermGroup};
use crate::ree::{ConicName, OrbitTable, ReeModel};
use crate::search::{
    admissible_params, completeness_search, match_reference, reference_designs, SearchGroup, SearchMode,
    SearchOptions, ALL_LAMBDAS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "secant-designs", version, about = "Flag-transitive 2-(36,6,λ) designs on the secants of a conic in PG(2,8)")]
pub struct Cli {
    /// More detail in reports (repeatable).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Plane, conic and line classification.
    Geometry {
        /// Print the full point-line incidence list.
        #[arg(long)]
        dump: bool,
    },
    /// The group on the secants and its distinguished elements.
    Group {
        /// Print generators of G in the generator text format.
        #[arg(long)]
        generators: bool,
    },
    /// Orbits of C_G(γ), C_G(η) and K on the secants.
    Orbits,
    /// The orbit designs D1..D4.
    Designs {
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        /// Verify parameters and flag-transitivity.
        #[arg(long)]
        verify: bool,
        /// Tactical decomposition at one secant.
        #[arg(long)]
        tactical: bool,
    },
    /// Verify a design file.
    Verify {
        /// Design in the text export format.
        input: PathBuf,
        /// Group to test flag-transitivity against.
        #[arg(long, value_enum)]
        group: Option<GroupArg>,
        /// Generators file instead of a named group.
        #[arg(long, conflicts_with = "group")]
        generators: Option<PathBuf>,
    },
    /// Automorphism group of a design.
    Aut {
        /// 1-4 for a built-in design, otherwise a design file.
        design: String,
        /// Print the automorphism generators.
        #[arg(long)]
        generators: bool,
    },
    /// Isomorphism test between two designs.
    Iso {
        /// 1-4 for a built-in design, otherwise a design file.
        first: String,
        second: String,
        /// Hex dump of both certificates.
        #[arg(long)]
        certificates: bool,
    },
    /// Completeness search for flag-transitive orbit designs.
    Search {
        #[arg(long, value_enum, default_value_t = SearchGroupArg::G)]
        group: SearchGroupArg,
        /// One of 1, 2, 3, 6 or `all`.
        #[arg(long, default_value = "all")]
        lambda: String,
        /// Scan all 6-subsets instead of the order-3 pruning.
        #[arg(long)]
        exhaustive: bool,
        /// Directory receiving one design file per class.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a design in the text or JSON format.
    Export {
        #[arg(long, value_enum)]
        which: DesignIndex,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Admissible parameters of a 2-(k²,k,λ) design.
    Params {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "1")]
    D1,
    #[value(name = "2")]
    D2,
    #[value(name = "3")]
    D3,
    #[value(name = "4")]
    D4,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DesignIndex {
    #[value(name = "1")]
    D1,
    #[value(name = "2")]
    D2,
    #[value(name = "3")]
    D3,
    #[value(name = "4")]
    D4,
}

impl DesignIndex {
    fn index(self) -> usize {
        self as usize
    }
}

impl Which {
    fn indices(self) -> Vec<usize> {
        match self {
            Which::All => vec![0, 1, 2, 3],
            w => vec![w as usize],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "Gprime", alias = "gprime")]
    Gprime,
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "trivial")]
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchGroupArg {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "Gprime", alias = "gprime")]
    Gprime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

const BASE_BLOCK_NAMES: [&str; 4] =
    ["B1 = (PP^γ)^{C_G(γ)}", "B2 = (P^γP^σ)^K", "B3 = (PW)^K", "B4 = (P^σW)^K"];

/// Failure that maps to exit code 1 with a JSON report.
struct Failure {
    command: &'static str,
    check: &'static str,
    detail: serde_json::Value,
}

impl Failure {
    fn new(command: &'static str, check: &'static str, detail: serde_json::Value) -> Self {
        Failure { command, check, detail }
    }

    fn report(&self) -> String {
        json!({"status": "fail", "command": self.command, "check": self.check, "detail": self.detail}).to_string()
    }
}

enum Outcome {
    Ok(String),
    Fail(String, Failure),
    /// Invalid input that parsed as arguments, e.g. an unreadable file.
    Usage(String),
}

fn design_error_detail(e: &DesignError) -> serde_json::Value {
    match e {
        DesignError::NonConstantLambda { pair, count, reference, expected } => json!({
            "kind": "non-constant-lambda", "pair": [pair.0, pair.1], "count": count,
            "reference": [reference.0, reference.1], "expected": expected,
        }),
        DesignError::NonConstantReplication { point, count, expected } => json!({
            "kind": "non-constant-replication", "point": point, "count": count, "expected": expected,
        }),
        DesignError::NotInvariant { generator, block } => json!({
            "kind": "not-invariant", "generator": generator, "block": block,
        }),
        other => json!({"kind": "error", "message": other.to_string()}),
    }
}

/// Parses `args` (program name first), runs the command against stdout and
/// stderr, and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli) {
        Outcome::Ok(text) => {
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Outcome::Fail(text, f) => {
            let _ = write!(out, "{text}");
            let _ = writeln!(out, "{}", f.report());
            EXIT_FAIL
        }
        Outcome::Usage(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn model() -> ReeModel {
    ReeModel::build().expect("the group model is internally consistent")
}

fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Geometry { dump } => geometry(*dump),
        Command::Group { generators } => group(*generators, cli.verbose),
        Command::Orbits => orbits(cli.verbose),
        Command::Designs { which, verify, tactical } => designs(*which, *verify, *tactical),
        Command::Verify { input, group, generators } => verify(input, *group, generators.as_deref()),
        Command::Aut { design, generators } => aut(design, *generators),
        Command::Iso { first, second, certificates } => iso(first, second, *certificates),
        Command::Search { group, lambda, exhaustive, out } => search(*group, lambda, *exhaustive, out.as_deref()),
        Command::Export { which, format, out } => export(*which, *format, out.as_deref()),
        Command::Params { k, lambda } => params(*k, *lambda),
    }
}

fn geometry(dump: bool) -> Outcome {
    let m = model();
    let c = &m.conic;
    let mut o = String::new();
    writeln!(o, "PG(2,8): {} points, {} lines", c.plane.points.len(), c.plane.lines.len()).unwrap();
    let coords = |p: usize| c.plane.points[p].coords.map(|e| e.bits());
    writeln!(o, "conic: {} points, nucleus N = point {} {:?}", c.conic_points.len(), c.nucleus, coords(c.nucleus))
        .unwrap();
    let through_nucleus = c.tangents.iter().filter(|&&l| c.plane.is_incident(c.nucleus, l)).count();
    writeln!(o, "secants: {}", c.secants.len()).unwrap();
    writeln!(o, "tangents: {} ({} through N)", c.tangents.len(), through_nucleus).unwrap();
    writeln!(o, "external lines: {}", c.externals.len()).unwrap();
    let kinds = (0..c.plane.lines.len()).filter(|&l| c.line_kind(l) == LineKind::Secant).count();
    debug_assert_eq!(kinds, c.secants.len());
    if dump {
        o.push_str(&Plane::incidence_dump(&c.plane));
    }
    let ok = c.plane.points.len() == 73
        && c.plane.lines.len() == 73
        && c.conic_points.len() == 9
        && c.secants.len() == 36
        && c.tangents.len() == 9
        && through_nucleus == 9
        && c.externals.len() == 28;
    if ok {
        Outcome::Ok(o)
    } else {
        Outcome::Fail(o, Failure::new("geometry", "line-classification", json!({"secants": c.secants.len()})))
    }
}

fn group(generators: bool, verbose: u8) -> Outcome {
    let m = model();
    let mut o = String::new();
    let prim = m.g.primitivity().map(|p| p.is_primitive()).unwrap_or(false);
    let gl = m.g.stabilizer(0);
    writeln!(o, "|G| = {}, |G'| = {}", m.g.order(), m.gder.order()).unwrap();
    writeln!(o, "G on secants: transitive {}, primitive {}", m.g.is_transitive(), prim).unwrap();
    writeln!(
        o,
        "G_ℓ (ℓ = secant 0 = {}): order {}, {}",
        m.secant_label(0),
        gl.order(),
        gl.structure_label().unwrap_or("?")
    )
    .unwrap();
    writeln!(o, "subdegrees: {:?}", m.subdegrees()).unwrap();
    writeln!(o, "γ = Frobenius, order {}", m.gamma.order()).unwrap();
    writeln!(o, "η: order {}, |C_G(η)| = {}", m.eta.order(), m.eta_full_centralizer_order()).unwrap();
    writeln!(o, "σ: order {}", m.sigma.order()).unwrap();
    for (name, h) in [("C_G(γ)", &m.cg_gamma), ("⟨η,σ⟩ = C_G'(γ)", &m.cg_eta), ("K = ⟨γ,σ⟩", &m.k)] {
        writeln!(o, "{name}: order {}, {}", h.order(), h.structure_label().unwrap_or("?")).unwrap();
    }
    let e = m.elation_check();
    writeln!(o, "σ is an elation with axis FN: {}", e.holds()).unwrap();
    for n in ConicName::ALL {
        writeln!(o, "  {:<6} conic position {}", n.label(), m.name(n)).unwrap();
    }
    if verbose > 0 {
        for (x, gen) in m.g.generators().iter().enumerate() {
            writeln!(o, "  generator {x}: cycles {:?}", gen.cycles()).unwrap();
        }
    }
    if generators {
        o.push_str(&format_generators(m.g.degree(), m.g.generators()));
    }
    let ok = m.g.order() == 1512 && m.gder.order() == 504 && prim && gl.order() == 42 && e.holds();
    if ok {
        Outcome::Ok(o)
    } else {
        Outcome::Fail(o, Failure::new("group", "group-structure", json!({"order": m.g.order()})))
    }
}

fn orbit_table(o: &mut String, t: &OrbitTable, verbose: u8) {
    writeln!(o, "{} (order {}): lengths {:?}", t.group, t.group_order, t.lengths()).unwrap();
    for orb in &t.orbits {
        write!(o, "  ({})^{}: {}", orb.label, t.group, orb.members.len()).unwrap();
        if verbose > 0 {
            write!(o, " {:?}", orb.members).unwrap();
        }
        o.push('\n');
    }
}

fn orbits(verbose: u8) -> Outcome {
    let m = model();
    let r = m.ured_orbits();
    let mut o = String::new();
    for t in [&r.cg_gamma, &r.cg_eta, &r.k] {
        orbit_table(&mut o, t, verbose);
    }
    for (name, ok) in &r.checks {
        writeln!(o, "[{}] {name}", if *ok { "ok" } else { "FAIL" }).unwrap();
    }
    if r.all_hold() {
        Outcome::Ok(o)
    } else {
        let failed: Vec<&str> = r.checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
        Outcome::Fail(o, Failure::new("orbits", "orbit-structure", json!({"failed": failed})))
    }
}

fn built_in(m: &ReeModel, i: usize) -> Design {
    orbit_design(&m.g, &m.base_blocks()[i]).expect("base blocks lie on the secants")
}

fn designs(which: Which, verify: bool, tactical: bool) -> Outcome {
    let m = model();
    let blocks = m.base_blocks();
    let mut o = String::new();
    for i in which.indices() {
        let d = built_in(&m, i);
        writeln!(o, "D{} = (S, B{}^G), {}: {:?}", i + 1, i + 1, BASE_BLOCK_NAMES[i], blocks[i]).unwrap();
        if !verify && !tactical {
            writeln!(o, "v={}, b={}, k={}", d.v(), d.b(), d.k()).unwrap();
        }
        if verify {
            let p = match verify_2design(&d) {
                Ok(p) => p,
                Err(e) => return Outcome::Fail(o, Failure::new("designs", "2-design", design_error_detail(&e))),
            };
            let ft = verify_flag_transitive(&m.g, &d).unwrap_or(false);
            writeln!(o, "{p}, flag-transitive: {ft}").unwrap();
            if !ft {
                return Outcome::Fail(o, Failure::new("designs", "flag-transitive", json!({"design": i + 1})));
            }
            if i == 0 {
                let ftd = verify_flag_transitive(&m.gder, &d).unwrap_or(false);
                writeln!(o, "G' flag-transitive: {ftd}").unwrap();
            }
        }
        if tactical {
            let x = m.secant(ConicName::F, ConicName::W);
            let gx = m.secant_stabilizer(x);
            match tactical_decomposition(&gx, &d, x) {
                Ok(recs) => {
                    for r in recs.iter().filter(|r| r.through_point) {
                        writeln!(
                            o,
                            "  x = {} ({}), |Δ| = {}: (v',b',k',r') = ({},{},{},{})",
                            x,
                            m.secant_label(x),
                            r.point_orbit.len(),
                            r.v,
                            r.b,
                            r.k,
                            r.r
                        )
                        .unwrap();
                    }
                }
                Err(e) => return Outcome::Fail(o, Failure::new("designs", "tactical", design_error_detail(&e))),
            }
        }
    }
    Outcome::Ok(o)
}

fn read_design(path: &Path) -> Result<Design, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Design::from_text(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn design_ref(m: &ReeModel, s: &str) -> Result<(String, Design), String> {
    let key = s.trim_start_matches(['D', 'd']);
    match key.parse::<usize>() {
        Ok(i @ 1..=4) if !Path::new(s).exists() => Ok((format!("D{i}"), built_in(m, i - 1))),
        _ => Ok((s.to_string(), read_design(Path::new(s))?)),
    }
}

fn verify(input: &Path, group: Option<GroupArg>, generators: Option<&Path>) -> Outcome {
    let d = match read_design(input) {
        Ok(d) => d,
        Err(e) => return Outcome::Usage(e),
    };
    let mut o = String::new();
    let p = match verify_2design(&d) {
        Ok(p) => p,
        Err(e) => return Outcome::Fail(o, Failure::new("verify", "2-design", design_error_detail(&e))),
    };
    writeln!(o, "{p}").unwrap();
    let h: Option<(String, PermGroup)> = if let Some(path) = generators {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return Outcome::Usage(format!("{}: {e}", path.display())),
        };
        match parse_generators(&text).and_then(|(n, gens)| PermGroup::generate(n, &gens)) {
            Ok(g) => Some((path.display().to_string(), g)),
            Err(e) => return Outcome::Usage(format!("{}: {e}", path.display())),
        }
    } else {
        group.map(|g| {
            let m = model();
            let grp = match g {
                GroupArg::G => m.g,
                GroupArg::Gprime => m.gder,
                GroupArg::K => m.k,
                GroupArg::Trivial => PermGroup::trivial(36),
            };
            (format!("{g:?}"), grp)
        })
    };
    if let Some((name, h)) = h {
        match verify_flag_transitive(&h, &d) {
            Ok(ft) => {
                writeln!(o, "flag-transitive under {name} (order {}): {ft}", h.order()).unwrap();
                if !ft {
                    return Outcome::Fail(o, Failure::new("verify", "flag-transitive", json!({"group": name})));
                }
            }
            Err(e) => return Outcome::Fail(o, Failure::new("verify", "invariance", design_error_detail(&e))),
        }
    }
    Outcome::Ok(o)
}

fn aut(design: &str, generators: bool) -> Outcome {
    let m = model();
    let (name, d) = match design_ref(&m, design) {
        Ok(x) => x,
        Err(e) => return Outcome::Usage(e),
    };
    let a = match automorphism_group(&d) {
        Ok(a) => a,
        Err(e) => return Outcome::Fail(String::new(), Failure::new("aut", "search", json!(e.to_string()))),
    };
    let mut o = String::new();
    writeln!(o, "|Aut({name})| = {}", a.order).unwrap();
    writeln!(o, "generators: {}, search nodes: {}", a.generators.len(), a.nodes).unwrap();
    match &a.group {
        Some(grp) if grp.degree() == m.g.degree() => {
            let contains = m.g.generators().iter().all(|g| grp.contains(g));
            writeln!(o, "contains G: {contains}").unwrap();
        }
        Some(_) => {}
        None => writeln!(o, "not materialized (order above cutoff)").unwrap(),
    }
    if generators {
        o.push_str(&format_generators(d.v(), &a.generators));
    }
    Outcome::Ok(o)
}

fn iso(first: &str, second: &str, certificates: bool) -> Outcome {
    let m = model();
    let ((n1, d1), (n2, d2)) = match (design_ref(&m, first), design_ref(&m, second)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Outcome::Usage(e),
    };
    let mut o = String::new();
    let (i1, i2) = (pair_invariants(&d1), pair_invariants(&d2));
    writeln!(o, "{n1}: block intersections {:?}", i1.intersections).unwrap();
    writeln!(o, "{n2}: block intersections {:?}", i2.intersections).unwrap();
    if certificates {
        writeln!(o, "certificate {n1}: {}", canonical_form(&d1).certificate_hex()).unwrap();
        writeln!(o, "certificate {n2}: {}", canonical_form(&d2).certificate_hex()).unwrap();
    }
    match are_isomorphic(&d1, &d2) {
        Ok(Some(w)) => {
            writeln!(o, "isomorphic: true").unwrap();
            writeln!(o, "witness: {:?}", w.images()).unwrap();
        }
        Ok(None) => writeln!(o, "isomorphic: false").unwrap(),
        Err(e) => return Outcome::Fail(o, Failure::new("iso", "witness", json!(e.to_string()))),
    }
    Outcome::Ok(o)
}

fn parse_lambdas(s: &str) -> Result<Vec<usize>, String> {
    if s == "all" {
        return Ok(ALL_LAMBDAS.to_vec());
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        match part.trim().parse::<usize>() {
            Ok(l) if ALL_LAMBDAS.contains(&l) => out.push(l),
            _ => return Err(format!("invalid --lambda {part:?}; expected 1, 2, 3, 6 or all")),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn search(group: SearchGroupArg, lambda: &str, exhaustive: bool, out: Option<&Path>) -> Outcome {
    let lambdas = match parse_lambdas(lambda) {
        Ok(l) => l,
        Err(e) => return Outcome::Usage(e),
    };
    let m = model();
    let sg = match group {
        SearchGroupArg::G => SearchGroup::G,
        SearchGroupArg::Gprime => SearchGroup::GPrime,
    };
    let mode = if exhaustive { SearchMode::Exhaustive } else { SearchMode::Pruned };
    let cat = match completeness_search(&m, &SearchOptions::new(sg, &lambdas, mode)) {
        Ok(c) => c,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    let refs = match reference_designs(&m) {
        Ok(r) => r,
        Err(e) => return Outcome::Fail(String::new(), Failure::new("search", "reference", json!(e.to_string()))),
    };
    let mut o = String::new();
    writeln!(o, "group {} (order {}), {:?} mode, λ ∈ {:?}", sg.label(), sg.group(&m).order(), mode, lambdas).unwrap();
    writeln!(o, "6-sets examined: {}, orbits rejected as non-designs: {}", cat.candidates, cat.rejected).unwrap();
    for ic in &cat.invariant_counts {
        writeln!(
            o,
            "order-3 representative with {} 3-cycles, {} fixed: {} invariant 6-sets (closed form {})",
            ic.three_cycles, ic.fixed_points, ic.enumerated, ic.closed_form
        )
        .unwrap();
    }
    writeln!(o, "{:<4} {:<4} {:<5} {:<6} {:<24} matches", "#", "λ", "b", "|H_B|", "base block").unwrap();
    for (i, e) in cat.entries.iter().enumerate() {
        let known = match_reference(e, &refs).map_or("-".to_string(), |j| format!("D{}", j + 1));
        writeln!(
            o,
            "{:<4} {:<4} {:<5} {:<6} {:<24} {known}",
            i + 1,
            e.params.lambda,
            e.params.b,
            e.stab_order,
            format!("{:?}", e.base_block)
        )
        .unwrap();
    }
    if let Some(dir) = out {
        if let Err(e) = std::fs::create_dir_all(dir) {
            return Outcome::Usage(format!("{}: {e}", dir.display()));
        }
        for (i, e) in cat.entries.iter().enumerate() {
            let path = dir.join(format!("class{}_lambda{}.txt", i + 1, e.params.lambda));
            if let Err(err) = std::fs::write(&path, e.design.to_text()) {
                return Outcome::Usage(format!("{}: {err}", path.display()));
            }
        }
    }
    writeln!(o, "{}", cat.summary()).unwrap();
    Outcome::Ok(o)
}

fn export(which: DesignIndex, format: Format, out: Option<&Path>) -> Outcome {
    let m = model();
    let i = which.index();
    let d = built_in(&m, i);
    let text = match format {
        Format::Text => d.to_text(),
        Format::Json => {
            let prov = Provenance { base_block: m.base_blocks()[i].clone(), group: "G".to_string() };
            DesignExport::new(&d, verify_2design(&d).ok(), Some(prov)).to_json()
        }
    };
    match out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome::Ok(String::new()),
            Err(e) => Outcome::Usage(format!("{}: {e}", path.display())),
        },
        None => Outcome::Ok(text),
    }
}

fn params(k: usize, lambda: usize) -> Outcome {
    match admissible_params(k, lambda) {
        Ok(a) => {
            let p = a.params;
            Outcome::Ok(format!(
                "v={}, b={}, r={}, k={}, λ={}\n(r/λ)² > k²: {}\n",
                p.v, p.b, p.r, p.k, p.lambda, a.ratio_exceeds_k
            ))
        }
        Err(e) => Outcome::Fail(
            format!("rejected: {e}\n"),
            Failure::new("params", "admissibility", json!({"k": k, "lambda": lambda, "message": e.to_string()})),
        ),
    }
}
