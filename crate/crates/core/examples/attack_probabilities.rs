//! Exact impersonation and substitution probabilities from the tag table.

use gray_auth::code::AuthCode;
use gray_auth::code::CodeSpec;
use gray_auth::verifier::{AttackReport, TagTable, DEFAULT_CAP};

fn main() -> Result<(), gray_auth::code::CodeError> {
    for (name, spec) in [
        ("P0", CodeSpec::new(2, 2, 2, 1, 1)),
        ("P1", CodeSpec::new(5, 2, 1, 1, 1)),
    ] {
        let code = AuthCode::build(&spec)?;
        let table = TagTable::build(&code, DEFAULT_CAP)?;
        let rep = AttackReport::compute(&table);
        let s = |i: usize| code.sources()[i].to_string();
        println!(
            "{name}: |K| = {}, |S| = {}, q = {}",
            rep.keys, rep.sources, rep.q
        );
        println!(
            "  p_I = {}  forge {} with tag #{}",
            rep.p_i,
            s(rep.p_i_witness.0),
            rep.p_i_witness.1
        );
        let ((o, ot), (f, ft)) = rep.p_s_witness;
        println!(
            "  p_S = {}  observe {} #{ot}, substitute {} #{ft}",
            rep.p_s,
            s(o),
            s(f)
        );
        println!("  impersonation counts {:?}", rep.impersonation_histogram);
        let sub: Vec<String> = rep
            .substitution_histogram
            .iter()
            .map(|(r, c)| format!("{r}: {c}"))
            .collect();
        println!("  substitution best ratios {{{}}}", sub.join(", "));
    }
    Ok(())
}
