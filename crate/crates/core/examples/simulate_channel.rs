//! Honest traffic and forgery attempts over a simulated channel.

use gray_auth::code::{AuthCode, CodeSpec, Key, Tag};
use gray_auth::protocol::{
    decode_message, encode_message, receive, run_attack, transmit, Adversary, Message, SimConfig,
};
use gray_auth::verifier::{AttackReport, TagTable, DEFAULT_CAP};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let code = AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 1))?;
    let key = Key(77);
    let source = code.sources()[9].clone();

    let sent = transmit(&code, key, &source)?;
    let frame = encode_message(&sent);
    println!(
        "frame: {} bytes, payload {}",
        frame.len(),
        String::from_utf8_lossy(&frame[4..])
    );
    let got = decode_message(&code, &frame)?;
    println!("receiver: {:?}", receive(&code, key, &got)?);

    let tampered = Message {
        source: got.source.clone(),
        tag: Tag(&got.tag.0 + &code.a().residue_field().one()),
    };
    println!("tampered tag: {:?}", receive(&code, key, &tampered)?);

    let table = TagTable::build(&code, DEFAULT_CAP)?;
    let attack = AttackReport::compute(&table);
    for adversary in [Adversary::Impersonation, Adversary::Substitution] {
        let sim = run_attack(
            &code,
            &attack,
            SimConfig {
                trials: 20_000,
                seed: 3,
                adversary,
            },
        )?;
        println!(
            "{adversary}: {}/{} accepted, frequency {:.4} vs exact {:.4} ({:.2} sigma)",
            sim.successes,
            sim.trials,
            sim.frequency,
            sim.exact,
            sim.z_score()
        );
    }
    Ok(())
}
