//! Transmitter, receiver and channel adversaries.
//!
//! Frames are a 4-byte big-endian length followed by
//! `s0|s1_0|...|s1_{n-1}|s2|tag`, each field in canonical element text.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::code::{AuthCode, CodeError, Key, SourceState, Tag};
use crate::verifier::{AttackReport, MessageCell};

/// Identifier of the generator behind every simulation: ChaCha8 seeded with
/// `seed_from_u64(seed)`, one stream per trial index.
pub const RNG_ID: &str = "chacha8/seed_from_u64/stream=trial";

#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("source state {0} is not in S")]
    NotInS(String),
    #[error("malformed frame: {0}")]
    Malformed(String),
    #[error("trials must be at least 1")]
    NoTrials,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Message {
    pub source: SourceState,
    pub tag: Tag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject,
}

pub fn transmit(code: &AuthCode, k: Key, s: &SourceState) -> Result<Message, ProtocolError> {
    if !code.contains_source(s) {
        return Err(ProtocolError::NotInS(s.to_string()));
    }
    Ok(Message {
        source: s.clone(),
        tag: code.encode(k, s)?,
    })
}

/// Accepts iff the source lies in `S` and the tag matches `e_k(source)`.
pub fn receive(code: &AuthCode, k: Key, m: &Message) -> Result<Verdict, ProtocolError> {
    let residue = code.a().residue_field();
    if m.tag.0.ring() != &residue {
        return Err(ProtocolError::Malformed(
            "tag is not an element of F_q".into(),
        ));
    }
    if !code.contains_source(&m.source) {
        return Ok(Verdict::Reject);
    }
    let expected = code.encode(k, &m.source)?;
    Ok(if expected == m.tag {
        Verdict::Accept
    } else {
        Verdict::Reject
    })
}

pub fn encode_message(m: &Message) -> Vec<u8> {
    let mut fields = vec![m.source.s0.to_string()];
    fields.extend(m.source.s1.iter().map(|c| c.to_string()));
    fields.push(m.source.s2.to_string());
    fields.push(m.tag.to_string());
    let payload = fields.join("|");
    let mut out = Vec::with_capacity(4 + payload.len());
    out.extend_from_slice(&(payload.len() as u32).to_be_bytes());
    out.extend_from_slice(payload.as_bytes());
    out
}

pub fn decode_message(code: &AuthCode, frame: &[u8]) -> Result<Message, ProtocolError> {
    let bad = |msg: &str| ProtocolError::Malformed(msg.to_string());
    if frame.len() < 4 {
        return Err(bad("missing length prefix"));
    }
    let len = u32::from_be_bytes(frame[..4].try_into().expect("4 bytes")) as usize;
    let payload = &frame[4..];
    if payload.len() != len {
        return Err(bad("length prefix does not match payload"));
    }
    let text = std::str::from_utf8(payload).map_err(|_| bad("payload is not UTF-8"))?;
    let fields: Vec<&str> = text.split('|').collect();
    let n = code.n();
    if fields.len() != n + 3 {
        return Err(ProtocolError::Malformed(format!(
            "expected {} fields, got {}",
            n + 3,
            fields.len()
        )));
    }
    let parse = |ring: &crate::ring::GaloisRing, s: &str| {
        ring.parse_element(s)
            .map_err(|e| ProtocolError::Malformed(format!("field `{s}`: {e}")))
    };
    let s0 = parse(code.b(), fields[0])?;
    let s1 = fields[1..=n]
        .iter()
        .map(|f| parse(code.b(), f))
        .collect::<Result<_, _>>()?;
    let s2 = parse(code.a(), fields[n + 1])?;
    let tag = parse(&code.a().residue_field(), fields[n + 2])?;
    Ok(Message {
        source: SourceState { s0, s1, s2 },
        tag: Tag(tag),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adversary {
    Impersonation,
    Substitution,
}

impl Adversary {
    pub fn label(&self) -> &'static str {
        match self {
            Adversary::Impersonation => "impersonation",
            Adversary::Substitution => "substitution",
        }
    }

    pub fn parse(text: &str) -> Option<Adversary> {
        match text {
            "impersonation" => Some(Adversary::Impersonation),
            "substitution" => Some(Adversary::Substitution),
            _ => None,
        }
    }
}

impl fmt::Display for Adversary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimConfig {
    pub trials: u64,
    pub seed: u64,
    pub adversary: Adversary,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimReport {
    pub adversary: Adversary,
    pub trials: u64,
    pub seed: u64,
    pub successes: u64,
    pub frequency: f64,
    /// Exact success probability the frequency estimates.
    pub exact: f64,
    /// Binomial standard error at the exact probability.
    pub sigma: f64,
    /// Message the adversary forges.
    pub forged: Message,
    /// Message the adversary observes first, for substitution.
    pub observed: Option<Message>,
}

impl SimReport {
    /// `|frequency - exact|` in standard errors.
    pub fn z_score(&self) -> f64 {
        if self.sigma == 0.0 {
            if (self.frequency - self.exact).abs() < f64::EPSILON {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (self.frequency - self.exact).abs() / self.sigma
        }
    }

    pub fn within(&self, sigmas: f64) -> bool {
        self.z_score() <= sigmas
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn message_at(code: &AuthCode, cell: MessageCell) -> Message {
    let tag = code.a().residue_field().element_from_index(cell.1 as u64);
    Message {
        source: code.sources()[cell.0].clone(),
        tag: Tag(tag),
    }
}

fn ratio_f64(r: &num_rational::Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Monte-Carlo run of the best adversary computed in `attack`.
///
/// Impersonation forges the maximizing `(s, t)` against a fresh uniform key.
/// Substitution lets the adversary pick the observed message: the key is
/// drawn uniformly among those producing it, then the best substitute is
/// sent under the same key.
pub fn run_attack(
    code: &AuthCode,
    attack: &AttackReport,
    sim: SimConfig,
) -> Result<SimReport, ProtocolError> {
    if sim.trials == 0 {
        return Err(ProtocolError::NoTrials);
    }
    let keys = code.key_count();
    let (forged, observed, exact) = match sim.adversary {
        Adversary::Impersonation => (
            message_at(code, attack.p_i_witness),
            None,
            ratio_f64(&attack.p_i),
        ),
        Adversary::Substitution => {
            let (obs, sub) = attack.p_s_witness;
            (
                message_at(code, sub),
                Some(message_at(code, obs)),
                ratio_f64(&attack.p_s),
            )
        }
    };
    let successes: u64 = (0..sim.trials)
        .into_par_iter()
        .map(|trial| -> Result<u64, ProtocolError> {
            let mut rng = trial_rng(sim.seed, trial);
            let key = match &observed {
                None => Key(rng.gen_range(0..keys)),
                Some(obs) => loop {
                    let k = Key(rng.gen_range(0..keys));
                    if transmit(code, k, &obs.source)?.tag == obs.tag {
                        break k;
                    }
                },
            };
            Ok((receive(code, key, &forged)? == Verdict::Accept) as u64)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    let n = sim.trials as f64;
    Ok(SimReport {
        adversary: sim.adversary,
        trials: sim.trials,
        seed: sim.seed,
        successes,
        frequency: successes as f64 / n,
        exact,
        sigma: (exact * (1.0 - exact) / n).sqrt(),
        forged,
        observed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeSpec;
    use crate::verifier::{TagTable, DEFAULT_CAP};

    fn p0() -> AuthCode {
        AuthCode::build(&CodeSpec::new(2, 2, 2, 1, 1)).unwrap()
    }

    #[test]
    fn zero_state_tag_is_zero() {
        let c = p0();
        let s = c
            .sources()
            .iter()
            .find(|s| s.s0.is_zero() && s.s2.is_zero())
            .unwrap()
            .clone();
        // key 0: x = 0, w = 0, offset 0
        let m = transmit(&c, Key(0), &s).unwrap();
        assert!(m.tag.0.is_zero());
        assert_eq!(receive(&c, Key(0), &m).unwrap(), Verdict::Accept);
    }

    #[test]
    fn shifted_tag_is_rejected() {
        let c = p0();
        let f = c.a().residue_field();
        let s = c.sources()[5].clone();
        for k in [0u64, 7, 130, 255] {
            let m = transmit(&c, Key(k), &s).unwrap();
            for shift in f.elements().filter(|e| !e.is_zero()) {
                let forged = Message {
                    source: m.source.clone(),
                    tag: Tag(&m.tag.0 + &shift),
                };
                assert_eq!(receive(&c, Key(k), &forged).unwrap(), Verdict::Reject);
            }
        }
    }

    #[test]
    fn rejects_states_outside_s() {
        let c = p0();
        let outside = SourceState {
            s0: c.b().zero(),
            s1: vec![c.b().zero()],
            s2: c.a().zero(),
        };
        assert!(matches!(
            transmit(&c, Key(0), &outside),
            Err(ProtocolError::NotInS(_))
        ));
        let m = Message {
            source: outside,
            tag: Tag(c.a().residue_field().zero()),
        };
        assert_eq!(receive(&c, Key(0), &m).unwrap(), Verdict::Reject);
    }

    #[test]
    fn frame_layout() {
        let c = p0();
        let s = c.sources()[0].clone();
        let m = transmit(&c, Key(3), &s).unwrap();
        let frame = encode_message(&m);
        let text = std::str::from_utf8(&frame[4..]).unwrap();
        assert_eq!(
            u32::from_be_bytes(frame[..4].try_into().unwrap()) as usize,
            text.len()
        );
        assert_eq!(text.split('|').count(), 4);
        assert_eq!(decode_message(&c, &frame).unwrap(), m);
        assert!(decode_message(&c, &frame[..frame.len() - 1]).is_err());
        assert!(decode_message(&c, b"\0\0\0\x03a|b").is_err());
    }

    #[test]
    fn simulation_is_seeded() {
        let c = p0();
        let table = TagTable::build(&c, DEFAULT_CAP).unwrap();
        let attack = AttackReport::compute(&table);
        let sim = SimConfig {
            trials: 2000,
            seed: 5,
            adversary: Adversary::Substitution,
        };
        let a = run_attack(&c, &attack, sim).unwrap();
        let b = run_attack(&c, &attack, sim).unwrap();
        assert_eq!(a, b);
        assert!(matches!(
            run_attack(&c, &attack, SimConfig { trials: 0, ..sim }),
            Err(ProtocolError::NoTrials)
        ));
    }
}
