//! Command-line front end. [`run`] returns the process exit code:
//! 0 on success, 1 on usage or input errors, 2 when a report carries a
//! fatal finding.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::code::config::load_config;
use crate::code::{build_map, AuthCode, CodeSpec};
use crate::gray::GrayMap;
use crate::protocol::{run_attack, Adversary, SimConfig, RNG_ID};
use crate::report::{Format, Record, RunReport, Section};
use crate::resilience::check_resilient;
use crate::ring::{Extension, GaloisRing, RingElement, DEFAULT_ELEMENT_CAP};
use crate::verifier::{
    verify_injectivity, Assertion, AttackReport, Case, InjectivityReport, Oracle, TagTable,
    VerifyMode, DEFAULT_CAP,
};

#[derive(Debug, Parser)]
#[command(
    name = "gray-auth",
    version,
    about = "Gray-map authentication codes over Galois rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Instance configuration file.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Pair enumeration for verify-injectivity.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,
    /// Simulation trials, or sampled pairs in sampled mode.
    #[arg(long, global = true)]
    pub trials: Option<u64>,
    /// RNG seed; defaults to the config's seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AdversaryArg {
    Impersonation,
    Substitution,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe A, B, their Teichmuller sets and the embedding.
    RingInfo,
    /// Print the Gray map of every element of A.
    GrayTable,
    /// Build the code and list every construction set.
    BuildCode,
    /// Check the configured f for t-resiliency.
    CheckResilience,
    /// Check that distinct keys give distinct encoding rules.
    VerifyInjectivity,
    /// Exact impersonation and substitution probabilities.
    AttackProbs,
    /// Monte-Carlo attacks over the simulated channel.
    Simulate {
        #[arg(long, value_enum, default_value_t = AdversaryArg::Both)]
        adversary: AdversaryArg,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::RingInfo => "ring-info",
            Command::GrayTable => "gray-table",
            Command::BuildCode => "build-code",
            Command::CheckResilience => "check-resilience",
            Command::VerifyInjectivity => "verify-injectivity",
            Command::AttackProbs => "attack-probs",
            Command::Simulate { .. } => "simulate",
        }
    }
}

/// Failure before a report exists; always exit code 1.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub const DEFAULT_TRIALS: u64 = 100_000;
pub const DEFAULT_SAMPLES: u64 = 10_000;

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let started = Instant::now();
    let result = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(pool) => pool.install(|| execute(&cli)),
        Err(e) => Err(UsageError(e.to_string())),
    };
    match result {
        Ok(report) => {
            let format = match cli.format {
                OutputFormat::Table => Format::Table,
                OutputFormat::Records => Format::Records,
            };
            let text = report.render(format);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 1;
                    }
                }
                None => print!("{text}"),
            }
            eprintln!(
                "{} finished in {:.2?}",
                cli.command.name(),
                started.elapsed()
            );
            if report.fatal {
                2
            } else {
                0
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

pub fn execute(cli: &Cli) -> Result<RunReport, UsageError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| UsageError("--config PATH is required".into()))?;
    let spec = load_config(path)?;
    match &cli.command {
        Command::RingInfo => ring_info(&spec),
        Command::GrayTable => gray_table(&spec),
        Command::BuildCode => build_code(&spec),
        Command::CheckResilience => check_resilience(&spec),
        Command::VerifyInjectivity => {
            let code = AuthCode::build(&spec)?;
            let mode = match cli.mode {
                Mode::Exhaustive => VerifyMode::Exhaustive,
                Mode::Sampled => VerifyMode::Sampled {
                    count: cli.trials.unwrap_or(DEFAULT_SAMPLES),
                    seed: cli.seed.unwrap_or(spec.seed),
                },
            };
            verify(&code, mode)
        }
        Command::AttackProbs => attack_probs(&AuthCode::build(&spec)?),
        Command::Simulate { adversary } => {
            let code = AuthCode::build(&spec)?;
            let adversaries = match adversary {
                AdversaryArg::Impersonation => vec![Adversary::Impersonation],
                AdversaryArg::Substitution => vec![Adversary::Substitution],
                AdversaryArg::Both => vec![Adversary::Impersonation, Adversary::Substitution],
            };
            simulate(
                &code,
                &adversaries,
                cli.trials.unwrap_or(DEFAULT_TRIALS),
                cli.seed.unwrap_or(spec.seed),
            )
        }
    }
}

fn strings<'a>(items: impl IntoIterator<Item = &'a RingElement>) -> Vec<String> {
    items.into_iter().map(|e| e.to_string()).collect()
}

fn ring_params_text(spec: &CodeSpec, a: &GaloisRing, b: &GaloisRing) -> String {
    format!(
        "p={} r={} ell={} n={}\nA={}\nB={}",
        spec.p,
        spec.r,
        spec.ell,
        spec.n,
        a.params(),
        b.params()
    )
}

fn rings(spec: &CodeSpec) -> Result<(GaloisRing, GaloisRing), UsageError> {
    let a = GaloisRing::new(spec.p, spec.r, spec.ell)?;
    let b = GaloisRing::new(spec.p, spec.r, spec.ell * spec.n.max(1))?;
    Ok((a, b))
}

pub fn ring_info(spec: &CodeSpec) -> Result<RunReport, UsageError> {
    let (a, b) = rings(spec)?;
    let mut report = RunReport::new("ring-info", ring_params_text(spec, &a, &b));
    let mut section = Section::new("rings", &["ring", "field", "value"]);
    for (name, ring) in [("A", &a), ("B", &b)] {
        let teich = ring.teichmuller();
        let t = strings(teich.elements());
        let coprime = strings(&ring.coprime_teichmuller());
        report.push(
            Record::new("ring")
                .with("name", name)
                .with("params", ring.params().to_string())
                .with("characteristic", ring.characteristic())
                .with("size", ring.size())
                .with("residue_size", ring.residue_size())
                .with("xi", teich.xi.to_string())
                .with("teichmuller", t.clone())
                .with("coprime_teichmuller", coprime.clone()),
        );
        for (field, value) in [
            ("params", ring.params().to_string()),
            ("size", ring.size().to_string()),
            ("residue size q", ring.residue_size().to_string()),
            ("xi", teich.xi.to_string()),
            ("T", t.join(" ")),
            ("G(T)", coprime.join(" ")),
        ] {
            section.row(vec![name.into(), field.into(), value]);
        }
    }
    let ext = Extension::new(&a, &b)?;
    let image = ext.embed(&a.x())?;
    let tr_one = ext.trace(&b.one())?;
    report.push(
        Record::new("extension")
            .with("degree", ext.degree())
            .with("embed_xi_a", image.to_string())
            .with("trace_one", tr_one.to_string()),
    );
    section.row(vec![
        "B/A".into(),
        "degree".into(),
        ext.degree().to_string(),
    ]);
    section.row(vec!["B/A".into(), "image of x".into(), image.to_string()]);
    section.row(vec!["B/A".into(), "Tr(1)".into(), tr_one.to_string()]);
    report.section(section);
    report.verdict = format!("|A| = {}, |B| = {}", a.size(), b.size());
    Ok(report)
}

pub fn gray_table(spec: &CodeSpec) -> Result<RunReport, UsageError> {
    let a = GaloisRing::new(spec.p, spec.r, spec.ell)?;
    let gray = GrayMap::new(&a);
    let mut report = RunReport::new(
        "gray-table",
        format!(
            "p={} r={} ell={}\nA={}",
            spec.p,
            spec.r,
            spec.ell,
            a.params()
        ),
    );
    let mut section = Section::new("gray map", &["index", "element", "image"]);
    let table = gray.table();
    let mut images = std::collections::HashSet::new();
    for (idx, elem, img) in &table {
        images.insert(img.clone());
        report.push(
            Record::new("gray")
                .with("index", *idx)
                .with("element", elem.to_string())
                .with("image", img.to_string()),
        );
        section.row(vec![idx.to_string(), elem.to_string(), img.to_string()]);
    }
    report.section(section);
    let injective = images.len() == table.len();
    let teich = a.teichmuller();
    let mut socle_failures = 0u64;
    for (_, elem, _) in &table {
        for c in teich.elements() {
            if gray.gray_add_socle(elem, c).is_err() {
                socle_failures += 1;
            }
        }
    }
    report.push(
        Record::new("gray-check")
            .with("injective", injective)
            .with("socle_additivity_failures", socle_failures)
            .with("elements", table.len()),
    );
    report.fatal = !injective || socle_failures > 0;
    report.verdict = format!(
        "{} elements, injective: {injective}, socle additivity failures: {socle_failures}",
        table.len()
    );
    Ok(report)
}

fn pair_text(p: &(RingElement, Vec<RingElement>)) -> String {
    format!("({}; {})", p.0, strings(&p.1).join(" "))
}

pub fn build_code(spec: &CodeSpec) -> Result<RunReport, UsageError> {
    let code = AuthCode::build(spec)?;
    let mut report = RunReport::new("build-code", code.canonical_params());
    let sets = code.sets();

    let mut listing = Section::new("sets", &["set", "size", "elements"]);
    let mut add_set = |report: &mut RunReport, name: &str, items: Vec<String>| {
        listing.row(vec![name.into(), items.len().to_string(), items.join(" ")]);
        report.push(
            Record::new("set")
                .with("name", name)
                .with("size", items.len())
                .with("elements", items),
        );
    };
    add_set(
        &mut report,
        "N",
        sets.n_set
            .vectors
            .iter()
            .map(|v| format!("({})", strings(v).join(" ")))
            .collect(),
    );
    add_set(&mut report, "L", strings(&sets.l_set));
    add_set(
        &mut report,
        "D_eta",
        sets.d_eta
            .iter()
            .map(|(a, v)| format!("({a}; {})", strings(v).join(" ")))
            .collect(),
    );
    for (k, block) in sets.t_blocks.iter().enumerate() {
        add_set(
            &mut report,
            &format!("T_theta_zeta_{k}"),
            block.iter().map(|e| pair_text(&e.pair)).collect(),
        );
    }
    add_set(
        &mut report,
        "T_eta_theta_Z",
        sets.t_eta_theta_z.iter().map(pair_text).collect(),
    );
    add_set(&mut report, "P", sets.pairs.iter().map(pair_text).collect());
    report.section(listing);

    let mut sizes = Section::new("cardinalities", &["name", "claimed", "actual", "holds"]);
    let mut mismatches = 0;
    for c in code.cardinality_checks() {
        if !c.holds() {
            mismatches += 1;
        }
        sizes.row(vec![
            c.name.clone(),
            c.claimed.to_string(),
            c.actual.to_string(),
            c.holds().to_string(),
        ]);
        report.push(
            Record::new("cardinality")
                .with("name", c.name.as_str())
                .with("claimed", c.claimed as u64)
                .with("actual", c.actual as u64)
                .with("holds", c.holds()),
        );
    }
    report.section(sizes);

    // two readings of the side condition behind the spare element
    let rm1 = (spec.r - 1) as u64;
    let lhs = rm1 * (spec.n as u64 + 1);
    let pm = (spec.p as u64).pow(spec.n);
    let mut side = Section::new(
        "side condition (r-1)(n+1) < X - 1",
        &["reading", "X", "holds"],
    );
    for (reading, x) in [("q^m", code.qm()), ("p^m", pm)] {
        let holds = lhs + 1 < x;
        side.row(vec![reading.into(), x.to_string(), holds.to_string()]);
        report.push(
            Record::new("side-condition")
                .with("reading", reading)
                .with("lhs", lhs)
                .with("bound", x - 1)
                .with("holds", holds),
        );
    }
    report.section(side);

    report.push(
        Record::new("source-space")
            .with("pairs", sets.pairs.len())
            .with("L", sets.l_set.len())
            .with("S", code.sources().len())
            .with("keys", code.key_count())
            .with("q", code.q()),
    );
    report.verdict = format!(
        "|P| = {}, |S| = {}, |K| = {}, {} cardinality formula(s) differ from enumeration",
        sets.pairs.len(),
        code.sources().len(),
        code.key_count(),
        mismatches
    );
    Ok(report)
}

pub fn check_resilience(spec: &CodeSpec) -> Result<RunReport, UsageError> {
    let (a, b) = rings(spec)?;
    let f = build_map(spec, &b)?;
    let mut report = RunReport::new(
        "check-resilience",
        format!("{}\nt={}\nf={f}", ring_params_text(spec, &a, &b), spec.t),
    );
    let n = spec.n as usize;
    let mut section = Section::new(
        "resiliency",
        &["t", "passed", "subsets", "restrictions", "failure"],
    );
    let mut claimed_ok = false;
    let mut max_order = None;
    for t in 0..n.max(1) {
        let rep = check_resilient(&f, t, DEFAULT_ELEMENT_CAP)?;
        if rep.passed {
            max_order = Some(t);
        }
        if t == spec.t as usize {
            claimed_ok = rep.passed;
        }
        let failure = rep
            .failure
            .as_ref()
            .map(|(j, fix)| format!("J={j:?} values={fix:?}"))
            .unwrap_or_default();
        section.row(vec![
            t.to_string(),
            rep.passed.to_string(),
            rep.subsets_checked.to_string(),
            rep.restrictions_checked.to_string(),
            failure.clone(),
        ]);
        report.push(
            Record::new("resilience")
                .with("t", t)
                .with("passed", rep.passed)
                .with("subsets", rep.subsets_checked)
                .with("restrictions", rep.restrictions_checked)
                .with(
                    "failure",
                    if failure.is_empty() {
                        Value::Null
                    } else {
                        Value::String(failure)
                    },
                ),
        );
    }
    if spec.t as usize >= n {
        // every coordinate fixed leaves nothing to balance; checked as n - 1
        claimed_ok = check_resilient(&f, spec.t as usize, DEFAULT_ELEMENT_CAP)?.passed;
    }
    report.section(section);
    report.fatal = !claimed_ok;
    report.verdict = format!(
        "f is {}{}-resilient as claimed; largest order passing: {}",
        if claimed_ok { "" } else { "NOT " },
        spec.t,
        max_order.map_or("none".to_string(), |t| t.to_string())
    );
    Ok(report)
}

pub fn verify(code: &AuthCode, mode: VerifyMode) -> Result<RunReport, UsageError> {
    let oracle = Oracle::new(code, DEFAULT_CAP);
    let rep = verify_injectivity(code, &oracle, mode, DEFAULT_CAP)?;
    let mode_text = match mode {
        VerifyMode::Exhaustive => "exhaustive".to_string(),
        VerifyMode::Sampled { count, seed } => {
            format!("sampled count={count} seed={seed} rng={RNG_ID}")
        }
    };
    let mut report = RunReport::new(
        "verify-injectivity",
        format!("{}\nmode={mode_text}", code.canonical_params()),
    );
    injectivity_findings(&mut report, &rep);
    Ok(report)
}

pub fn injectivity_findings(report: &mut RunReport, rep: &InjectivityReport) {
    let mut cases = Section::new("cases", &["case", "pairs", "constructive", "percent"]);
    for case in Case::ALL {
        let t = rep.per_case.get(&case).copied().unwrap_or_default();
        let pct = format!("{:.2}", t.percent());
        cases.row(vec![
            case.label().into(),
            t.total.to_string(),
            t.constructive.to_string(),
            pct.clone(),
        ]);
        report.push(
            Record::new("case")
                .with("case", case.label())
                .with("pairs", t.total)
                .with("constructive", t.constructive)
                .with("percent", pct),
        );
    }
    report.section(cases);

    let mut leaves = Section::new(
        "decision-tree leaves",
        &["leaf", "pairs", "constructive", "fallback"],
    );
    for leaf in Assertion::ALL {
        let Some(t) = rep.per_planned.get(&leaf) else {
            continue;
        };
        leaves.row(vec![
            leaf.label().into(),
            t.total.to_string(),
            t.constructive.to_string(),
            (t.total - t.constructive).to_string(),
        ]);
        report.push(
            Record::new("assertion")
                .with("label", leaf.label())
                .with("pairs", t.total)
                .with("constructive", t.constructive)
                .with("used", rep.per_used.get(&leaf).copied().unwrap_or(0)),
        );
    }
    report.section(leaves);

    if !rep.fallbacks.is_empty() {
        let mut fb = Section::new(
            "proof-gap findings",
            &["leaf", "count", "example keys", "reason"],
        );
        for ((leaf, why), count) in &rep.fallbacks {
            let (k0, k1) = rep.fallback_examples[&(*leaf, why.clone())];
            fb.row(vec![
                leaf.label().into(),
                count.to_string(),
                format!("{k0},{k1}"),
                why.clone(),
            ]);
            report.push(
                Record::new("fallback")
                    .with("planned", leaf.label())
                    .with("reason", why.as_str())
                    .with("count", *count)
                    .with("example", json!([k0, k1])),
            );
        }
        report.section(fb);
    }
    for &(k0, k1) in &rep.collisions {
        report.push(Record::new("collision").with("k0", k0).with("k1", k1));
    }
    for &(k0, k1) in &rep.disagreements {
        report.push(
            Record::new("oracle-disagreement")
                .with("k0", k0)
                .with("k1", k1),
        );
    }
    let total = rep.constructive();
    report.push(
        Record::new("summary")
            .with("pairs", rep.pairs_examined)
            .with("collisions", rep.collisions.len())
            .with("disagreements", rep.disagreements.len())
            .with("constructive", total.constructive)
            .with("brute_force", total.total - total.constructive),
    );
    report.fatal = !rep.passed();
    report.verdict = format!(
        "{} collisions / {} pairs, {} oracle disagreements, {} brute-force fallbacks",
        rep.collisions.len(),
        rep.pairs_examined,
        rep.disagreements.len(),
        total.total - total.constructive
    );
}

fn ratio_value(r: &Ratio<u64>) -> Value {
    json!({"num": r.numer(), "den": r.denom(), "text": r.to_string()})
}

fn cell_text(code: &AuthCode, cell: (usize, u32)) -> String {
    let tag = code.a().residue_field().element_from_index(cell.1 as u64);
    format!("s#{} {} t={}", cell.0, code.sources()[cell.0], tag)
}

pub fn attack_probs(code: &AuthCode) -> Result<RunReport, UsageError> {
    let table = TagTable::build(code, DEFAULT_CAP)?;
    let attack = AttackReport::compute(&table);
    let mut report = RunReport::new("attack-probs", code.canonical_params());
    let mut section = Section::new("attack probabilities", &["quantity", "value", "witness"]);
    let (obs, sub) = attack.p_s_witness;
    section.row(vec![
        "p_I".into(),
        attack.p_i.to_string(),
        cell_text(code, attack.p_i_witness),
    ]);
    section.row(vec![
        "p_S".into(),
        attack.p_s.to_string(),
        format!("{} -> {}", cell_text(code, obs), cell_text(code, sub)),
    ]);
    section.row(vec!["1/q".into(), format!("1/{}", code.q()), String::new()]);
    report.section(section);
    report.push(
        Record::new("p_I")
            .with("value", ratio_value(&attack.p_i))
            .with("source", attack.p_i_witness.0)
            .with("tag", attack.p_i_witness.1),
    );
    report.push(
        Record::new("p_S")
            .with("value", ratio_value(&attack.p_s))
            .with("observed", json!([obs.0, obs.1]))
            .with("substitute", json!([sub.0, sub.1])),
    );
    let mut hist = Section::new(
        "impersonation histogram",
        &["keys with e_k(s) = t", "cells (s, t)"],
    );
    for (count, cells) in &attack.impersonation_histogram {
        hist.row(vec![count.to_string(), cells.to_string()]);
        report.push(
            Record::new("impersonation-histogram")
                .with("keys", *count)
                .with("cells", *cells),
        );
    }
    report.section(hist);
    let mut hist = Section::new(
        "substitution histogram",
        &["best conditional success", "observable cells"],
    );
    for (ratio, cells) in &attack.substitution_histogram {
        hist.row(vec![ratio.to_string(), cells.to_string()]);
        report.push(
            Record::new("substitution-histogram")
                .with("ratio", ratio.to_string())
                .with("cells", *cells),
        );
    }
    report.section(hist);
    let lower = Ratio::new(1, code.q());
    let ok = attack.p_i >= lower
        && attack.p_i <= Ratio::from_integer(1)
        && attack.p_s <= Ratio::from_integer(1);
    report.fatal = !ok;
    report.verdict = format!("p_I = {}, p_S = {} (1/q = {lower})", attack.p_i, attack.p_s);
    Ok(report)
}

pub fn simulate(
    code: &AuthCode,
    adversaries: &[Adversary],
    trials: u64,
    seed: u64,
) -> Result<RunReport, UsageError> {
    let table = TagTable::build(code, DEFAULT_CAP)?;
    let attack = AttackReport::compute(&table);
    let mut report = RunReport::new(
        "simulate",
        format!(
            "{}\ntrials={trials} seed={seed} rng={RNG_ID}",
            code.canonical_params()
        ),
    );
    let mut section = Section::new(
        "simulation",
        &[
            "adversary",
            "successes",
            "frequency",
            "exact",
            "sigma",
            "z",
            "within 3 sigma",
        ],
    );
    let mut summary = Vec::new();
    for &adversary in adversaries {
        let sim = run_attack(
            code,
            &attack,
            SimConfig {
                trials,
                seed,
                adversary,
            },
        )?;
        let within = sim.within(3.0);
        section.row(vec![
            adversary.label().into(),
            sim.successes.to_string(),
            format!("{:.6}", sim.frequency),
            format!("{:.6}", sim.exact),
            format!("{:.6}", sim.sigma),
            format!("{:.3}", sim.z_score()),
            within.to_string(),
        ]);
        report.push(
            Record::new("simulation")
                .with("adversary", adversary.label())
                .with("trials", trials)
                .with("successes", sim.successes)
                .with("frequency", format!("{:.6}", sim.frequency))
                .with("exact", format!("{:.6}", sim.exact))
                .with("sigma", format!("{:.6}", sim.sigma))
                .with("z", format!("{:.3}", sim.z_score()))
                .with("within_3_sigma", within)
                .with(
                    "forged",
                    format!("{}|{}", sim.forged.source, sim.forged.tag),
                )
                .with(
                    "observed",
                    sim.observed.as_ref().map_or(Value::Null, |m| {
                        Value::String(format!("{}|{}", m.source, m.tag))
                    }),
                ),
        );
        summary.push(format!(
            "{} {}/{}",
            adversary.label(),
            sim.successes,
            trials
        ));
    }
    report.section(section);
    report.verdict = summary.join(", ");
    Ok(report)
}
