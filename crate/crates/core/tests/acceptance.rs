//! One PASS/FAIL line per acceptance criterion.
//!
//! Tolerances: the P0 exhaustive run must finish within 60 s on one thread,
//! and Monte-Carlo frequencies must lie within 3 binomial standard errors of
//! the exact probabilities after 100000 trials with seed 20240611.
//!
//! A criterion listed in `KNOWN_RED` still prints FAIL. The process exits
//! nonzero if any other criterion fails, or if a known-red one passes.

use std::collections::HashSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use gray_auth::code::{AuthCode, CodeSpec, Key, Tag};
use gray_auth::gray::GrayMap;
use gray_auth::protocol::{
    decode_message, encode_message, run_attack, transmit, Adversary, Message, SimConfig,
};
use gray_auth::ring::{Extension, GaloisRing};
use gray_auth::verifier::{
    verify_injectivity, AttackReport, Case, Oracle, TagTable, VerifyMode, DEFAULT_CAP,
};
use num_rational::Ratio;

const P0_TIME_LIMIT: Duration = Duration::from_secs(60);
const SIGMAS: f64 = 3.0;
const TRIALS: u64 = 100_000;
const SEED: u64 = 20240611;

/// Criterion number and the reason it cannot pass as stated.
const KNOWN_RED: &[(usize, &str)] = &[(
    4,
    "the |N| formula counts the zero vector once per X_{b,t} family; enumeration gives q^{m(t-1)} + (n-t+1)(q^m-1)",
)];

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn p0() -> AuthCode {
    AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 1)).expect("P0 builds")
}

fn p1() -> AuthCode {
    AuthCode::build(&CodeSpec::new(5, 2, 1, 1, 1)).expect("P1 builds")
}

fn exhaustive_p0_single_thread() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let start = Instant::now();
    let rep = pool.install(|| {
        let code = p0();
        let oracle = Oracle::new(&code, DEFAULT_CAP);
        verify_injectivity(&code, &oracle, VerifyMode::Exhaustive, DEFAULT_CAP).unwrap()
    });
    let elapsed = start.elapsed();
    outcome(
        rep.pairs_examined == 32640 && rep.zero_collisions() && elapsed < P0_TIME_LIMIT,
        format!(
            "P0: {} pairs, {} collisions, {:.2} s on 1 thread (limit {} s)",
            rep.pairs_examined,
            rep.collisions.len(),
            elapsed.as_secs_f64(),
            P0_TIME_LIMIT.as_secs()
        ),
    )
}

fn exhaustive_p1() -> Outcome {
    let code = p1();
    let oracle = Oracle::new(&code, DEFAULT_CAP);
    let rep = verify_injectivity(&code, &oracle, VerifyMode::Exhaustive, DEFAULT_CAP).unwrap();
    let expected = 625 * 624 / 2;
    outcome(
        rep.pairs_examined == expected && rep.zero_collisions(),
        format!(
            "P1: {} pairs, {} collisions",
            rep.pairs_examined,
            rep.collisions.len()
        ),
    )
}

fn witness_agreement() -> Outcome {
    let code = p0();
    let oracle = Oracle::new(&code, DEFAULT_CAP);
    let rep = verify_injectivity(&code, &oracle, VerifyMode::Exhaustive, DEFAULT_CAP).unwrap();
    let mut parts = Vec::new();
    let mut targets_met = true;
    for case in Case::ALL {
        let t = rep.per_case.get(&case).copied().unwrap_or_default();
        parts.push(format!("{} {:.1}%", case.label(), t.percent()));
        if matches!(case, Case::I | Case::III) && t.constructive != t.total {
            targets_met = false;
        }
    }
    let total = rep.constructive();
    outcome(
        rep.passed() && targets_met,
        format!(
            "P0: {} disagreements, {} witnesses without tag difference; constructive {:.1}% ({})",
            rep.disagreements.len(),
            rep.collisions.len(),
            total.percent(),
            parts.join(", ")
        ),
    )
}

fn cardinalities() -> Outcome {
    let mut mismatches = Vec::new();
    let mut x_sizes = Vec::new();
    for (name, code) in [("P0", p0()), ("P1", p1())] {
        for c in code.cardinality_checks() {
            if c.name.starts_with("|X_b,t|") {
                x_sizes.push(format!(
                    "{name} {} claimed {} actual {}",
                    c.name, c.claimed, c.actual
                ));
            } else if !c.holds() {
                mismatches.push(format!(
                    "{name} {} claimed {} enumerated {}",
                    c.name, c.claimed, c.actual
                ));
            }
        }
    }
    let head = if mismatches.is_empty() {
        "all formulas match".to_string()
    } else {
        format!("mismatch: {}", mismatches.join("; "))
    };
    outcome(
        mismatches.is_empty(),
        format!("{head}; surfaced: {}", x_sizes.join("; ")),
    )
}

fn gray_maps() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for d in [1, 2] {
        let ring = GaloisRing::new(2, 2, d).unwrap();
        let gray = GrayMap::new(&ring);
        let images: HashSet<_> = ring.elements().map(|a| gray.gray(&a)).collect();
        let injective = images.len() as u64 == ring.size();
        let teich = ring.teichmuller();
        let socle = ring
            .elements()
            .all(|a| teich.elements().all(|c| gray.gray_add_socle(&a, c).is_ok()));
        ok &= injective && socle;
        notes.push(format!(
            "GR(4,{d}) injective {injective} socle-additive {socle}"
        ));
    }
    let z4 = GaloisRing::new(2, 2, 1).unwrap();
    let gray = GrayMap::new(&z4);
    let table: Vec<String> = z4
        .elements()
        .map(|a| gray.gray(&a).coords.iter().map(|c| c.to_string()).collect())
        .collect();
    let classical = table == ["00", "01", "11", "10"];
    ok &= classical;
    notes.push(format!("Z_4 table {}", table.join(" ")));
    outcome(ok, notes.join("; "))
}

fn trace_checks(ext: &Extension) -> (bool, bool) {
    let (a, b) = (ext.base(), ext.ext());
    let tr: Vec<_> = b.elements().map(|x| ext.trace(&x).unwrap()).collect();
    let image: HashSet<_> = tr.iter().collect();
    let surjective = image.len() as u64 == a.size();
    let elems: Vec<_> = b.elements().collect();
    let additive = elems.iter().enumerate().all(|(i, x)| {
        elems
            .iter()
            .enumerate()
            .all(|(j, y)| ext.trace(&(x + y)).unwrap() == &tr[i] + &tr[j])
    });
    let homogeneous = a.elements().all(|c| {
        let ce = ext.embed(&c).unwrap();
        elems
            .iter()
            .enumerate()
            .all(|(i, x)| ext.trace(&(&ce * x)).unwrap() == &c * &tr[i])
    });
    (additive && homogeneous, surjective)
}

fn traces() -> Outcome {
    let z4 = GaloisRing::new(2, 2, 1).unwrap();
    let gr42 = GaloisRing::new(2, 2, 2).unwrap();
    let gr44 = GaloisRing::new(2, 2, 4).unwrap();
    let code = p0();
    let cases = [
        ("GR(4,2)/Z_4", Extension::new(&z4, &gr42).unwrap()),
        ("GR(4,4)/GR(4,2)", Extension::new(&gr42, &gr44).unwrap()),
        ("P0 B/A", code.ext().clone()),
    ];
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, ext) in &cases {
        let (linear, onto) = trace_checks(ext);
        ok &= linear && onto;
        notes.push(format!("{name} linear {linear} onto {onto}"));
    }
    for (name, code) in [("P0", p0()), ("P1", p1())] {
        let l = &code.sets().l_set;
        let good = l.iter().all(|u| {
            l.iter().all(|v| {
                let d = u - v;
                d.is_zero() || d.is_unit()
            })
        });
        ok &= good;
        notes.push(format!("{name} L differences units-or-zero {good}"));
    }
    outcome(ok, notes.join("; "))
}

fn attacks() -> Outcome {
    let code = p0();
    let rep = AttackReport::compute(&TagTable::build(&code, DEFAULT_CAP).unwrap());
    let lower = rep.p_i >= Ratio::new(1, code.q());
    let mut ok = lower;
    let mut notes = vec![format!(
        "p_I = {} (>= 1/{} {lower}), p_S = {}",
        rep.p_i,
        code.q(),
        rep.p_s
    )];
    for adversary in [Adversary::Impersonation, Adversary::Substitution] {
        let sim = run_attack(
            &code,
            &rep,
            SimConfig {
                trials: TRIALS,
                seed: SEED,
                adversary,
            },
        )
        .unwrap();
        ok &= sim.within(SIGMAS);
        notes.push(format!(
            "{adversary} {}/{} = {:.4}, z = {:.2}",
            sim.successes,
            sim.trials,
            sim.frequency,
            sim.z_score()
        ));
    }
    outcome(ok, notes.join("; "))
}

fn determinism() -> Outcome {
    let cfg = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/p0.cfg");
    let cfg = cfg.to_str().unwrap();
    let runs: [&[&str]; 3] = [
        &["verify-injectivity", "--config", cfg, "--format", "records"],
        &["attack-probs", "--config", cfg],
        &[
            "simulate", "--config", cfg, "--trials", "20000", "--seed", "4",
        ],
    ];
    let mut identical = true;
    for args in runs {
        let out = || {
            Command::new(env!("CARGO_BIN_EXE_gray-auth"))
                .args(args)
                .output()
                .unwrap()
        };
        let (a, b) = (out(), out());
        identical &= a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    }

    let code = p0();
    let residue = code.a().residue_field();
    let mut frames = 0u64;
    let mut round_trip = true;
    for s in code.sources() {
        for t in residue.elements() {
            let m = Message {
                source: s.clone(),
                tag: Tag(t),
            };
            round_trip &= decode_message(&code, &encode_message(&m)).ok().as_ref() == Some(&m);
            frames += 1;
        }
        for k in 0..code.key_count() {
            let m = transmit(&code, Key(k), s).unwrap();
            round_trip &= decode_message(&code, &encode_message(&m)).ok().as_ref() == Some(&m);
        }
    }
    outcome(
        identical && round_trip,
        format!(
            "3 reports byte-identical across runs {identical}; {frames} messages and {} transmissions round-trip {round_trip}",
            code.key_count() * code.sources().len() as u64
        ),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("exhaustive injectivity at P0", exhaustive_p0_single_thread),
        ("exhaustive injectivity at P1", exhaustive_p1),
        ("witnesses agree with the oracle", witness_agreement),
        ("cardinality formulas", cardinalities),
        ("Gray map", gray_maps),
        ("trace and L differences", traces),
        ("attack probabilities", attacks),
        ("determinism and serialization", determinism),
    ];
    let mut unexpected = 0;
    let mut passed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        let known = KNOWN_RED.iter().find(|(n, _)| *n == i + 1);
        passed += usize::from(o.pass);
        unexpected += usize::from(o.pass == known.is_some());
        println!(
            "{} {}. {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
        if let Some((_, why)) = known {
            println!("     known red: {why}");
        }
    }
    println!(
        "acceptance: {passed} of {} criteria pass, {} known red, {unexpected} unexpected",
        criteria.len(),
        KNOWN_RED.len()
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
