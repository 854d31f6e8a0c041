//! Resiliency of a few maps B^n -> B.

use gray_auth::resilience::{check_resilient, ResilientMap};
use gray_auth::ring::{GaloisRing, DEFAULT_ELEMENT_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = GaloisRing::new(2, 2, 2)?;
    let sum = ResilientMap::linear(&b, vec![b.one(), b.one()], 1)?;
    let twisted = ResilientMap::linear(&b, vec![b.x(), b.from_int(3)], 1)?;
    let mut proj = sum.to_table()?;
    if let gray_auth::resilience::MapKind::Table(t) = &mut proj.kind {
        for (idx, v) in t.iter_mut() {
            *v = b.element_from_index(idx % b.size());
        }
    }

    for (name, f) in [("x0 + x1", &sum), ("xi x0 - x1", &twisted), ("x0", &proj)] {
        for t in 0..2 {
            let rep = check_resilient(f, t, DEFAULT_ELEMENT_CAP)?;
            println!(
                "{name:<10} t={t}: {:<5} ({} subsets, {} restrictions){}",
                rep.passed,
                rep.subsets_checked,
                rep.restrictions_checked,
                rep.failure
                    .map(|(j, v)| format!(", fails at J={j:?} fixed to {v:?}"))
                    .unwrap_or_default()
            );
        }
    }
    Ok(())
}
