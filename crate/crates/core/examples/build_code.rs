//! Builds the smallest nontrivial instance and lists its construction sets.

use gray_auth::code::{AuthCode, CodeSpec, TeichSpec};

fn main() -> Result<(), gray_auth::code::CodeError> {
    let code = AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 1))?;
    println!("{}\n", code.canonical_params());

    let sets = code.sets();
    let show = |v: &[gray_auth::ring::RingElement]| {
        v.iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("N:");
    for v in &sets.n_set.vectors {
        println!("  ({})", show(v));
    }
    println!(
        "L: {}",
        show(&sets.l_set.iter().cloned().collect::<Vec<_>>())
    );
    println!("source pairs (s0; s1):");
    for (s0, s1) in &sets.pairs {
        println!("  ({s0}; {})", show(s1));
    }
    println!(
        "|S| = {}, |K| = {}\n",
        code.sources().len(),
        code.key_count()
    );

    for c in code.cardinality_checks() {
        let mark = if c.holds() { "ok" } else { "DIFFERS" };
        println!(
            "{:<18} claimed {:>3}  enumerated {:>3}  {mark}",
            c.name, c.claimed, c.actual
        );
    }

    // explicit parameters instead of defaults
    let mut spec = CodeSpec::new(5, 2, 1, 1, 1);
    spec.eta = Some(vec![TeichSpec::Power(2)]);
    spec.theta = Some(vec![TeichSpec::Power(3)]);
    let custom = AuthCode::build(&spec)?;
    println!(
        "\ncustom instance: spare {}, Z = {}",
        custom.spare(),
        show(custom.zeta())
    );
    Ok(())
}
