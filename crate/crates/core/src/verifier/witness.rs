//! Distinguishing source states for pairs of distinct keys.
//!
//! The decision tree splits a pair `(k0, k1)` by the blocks `K_{x,w}` the keys
//! fall in and then by a few trace and projection tests. Each leaf names a
//! recipe producing a candidate state; a candidate counts only if it lies in
//! `S` and actually separates the two tags. Otherwise the pair is settled by
//! a search over `S` and the attempted recipe is kept as a finding.

use std::fmt;

use super::{Oracle, VerifyError};
use crate::code::{unit_vector, AuthCode, Key, KeyCoords, SourceState, Tag};
use crate::ring::{ResidueElement, RingElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    I,
    II,
    III,
    IV,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::I, Case::II, Case::III, Case::IV];

    pub fn label(&self) -> &'static str {
        match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
            Case::IV => "IV",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasePartition {
    pub case: Case,
    pub x: Vec<RingElement>,
    pub y: Vec<RingElement>,
    pub w0: RingElement,
    pub w1: RingElement,
    /// Offsets of `k0` and `k1` inside their blocks.
    pub k00: usize,
    pub k10: usize,
}

pub fn classify_case(code: &AuthCode, k0: Key, k1: Key) -> Result<CasePartition, VerifyError> {
    if k0 == k1 {
        return Err(VerifyError::SameKey(k0.0));
    }
    let c0 = code.key_coords(k0)?;
    let c1 = code.key_coords(k1)?;
    Ok(partition(&c0, &c1))
}

fn partition(c0: &KeyCoords, c1: &KeyCoords) -> CasePartition {
    let case = match (c0.x == c1.x, c0.w == c1.w) {
        (true, true) => Case::I,
        (false, true) => Case::II,
        (true, false) => Case::III,
        (false, false) => Case::IV,
    };
    CasePartition {
        case,
        x: c0.x.clone(),
        y: c1.x.clone(),
        w0: c0.w.clone(),
        w1: c1.w.clone(),
        k00: c0.offset,
        k10: c1.offset,
    }
}

/// Leaves of the decision tree, plus the search fallback.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Assertion {
    I,
    II00,
    II0100,
    II0101,
    II01100,
    II01101,
    II0111,
    II10,
    II1100,
    II1101,
    III0,
    III10,
    III11,
    IV0,
    IV1,
    BruteForce,
}

impl Assertion {
    pub const ALL: [Assertion; 16] = [
        Assertion::I,
        Assertion::II00,
        Assertion::II0100,
        Assertion::II0101,
        Assertion::II01100,
        Assertion::II01101,
        Assertion::II0111,
        Assertion::II10,
        Assertion::II1100,
        Assertion::II1101,
        Assertion::III0,
        Assertion::III10,
        Assertion::III11,
        Assertion::IV0,
        Assertion::IV1,
        Assertion::BruteForce,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Assertion::I => "I",
            Assertion::II00 => "II.0.0",
            Assertion::II0100 => "II.0.1.0.0",
            Assertion::II0101 => "II.0.1.0.1",
            Assertion::II01100 => "II.0.1.1.0.0",
            Assertion::II01101 => "II.0.1.1.0.1",
            Assertion::II0111 => "II.0.1.1.1",
            Assertion::II10 => "II.1.0",
            Assertion::II1100 => "II.1.1.0.0",
            Assertion::II1101 => "II.1.1.0.1",
            Assertion::III0 => "III.0",
            Assertion::III10 => "III.1.0",
            Assertion::III11 => "III.1.1",
            Assertion::IV0 => "IV.0",
            Assertion::IV1 => "IV.1",
            Assertion::BruteForce => "brute-force",
        }
    }

    pub fn from_label(label: &str) -> Option<Assertion> {
        Assertion::ALL.iter().copied().find(|a| a.label() == label)
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub k0: Key,
    pub k1: Key,
    pub case: CasePartition,
    /// Leaf reached by the decision tree.
    pub planned: Assertion,
    /// `planned` when its recipe worked, `BruteForce` otherwise.
    pub assertion_used: Assertion,
    pub witness: SourceState,
    pub tags: (Tag, Tag),
    /// Why the planned recipe did not deliver, when it did not.
    pub fallback_reason: Option<String>,
}

impl WitnessReport {
    pub fn constructive(&self) -> bool {
        self.assertion_used != Assertion::BruteForce
    }
}

/// Reasons a recipe can fail; kept coarse so they aggregate.
pub mod reason {
    pub const NOT_IN_S: &str = "candidate state not in S";
    pub const TAGS_EQUAL: &str = "candidate state gives equal tags";
    pub const NO_THETA: &str = "no theta in T(B) with nonzero trace against x_j - y_j";
    pub const NO_T_ENTRY: &str = "no T-block entry with the required trace property";
    pub const NO_EXPONENT: &str = "no t with Tr(p^t (x_j - y_j)) in the socle";
}

struct Plan {
    leaf: Assertion,
    candidates: Result<Vec<SourceState>, &'static str>,
}

/// Builds witnesses for one code instance.
pub struct WitnessBuilder<'a> {
    code: &'a AuthCode,
    oracle: &'a Oracle,
    teich_b: Vec<RingElement>,
    /// First `(0, s_1)` pair with `s_1 in N - {0}`.
    zero_pair: (RingElement, Vec<RingElement>),
    spare_b: RingElement,
}

impl<'a> WitnessBuilder<'a> {
    pub fn new(code: &'a AuthCode, oracle: &'a Oracle) -> Self {
        let teich_b = code.b().teichmuller().elements().cloned().collect();
        let zero_pair = code
            .sets()
            .pairs
            .iter()
            .find(|(s0, s1)| s0.is_zero() && s1.iter().any(|c| !c.is_zero()))
            .cloned()
            .expect("N contains a nonzero vector");
        let spare_b = code.ext().embed(code.spare()).expect("spare lies in A");
        WitnessBuilder {
            code,
            oracle,
            teich_b,
            zero_pair,
            spare_b,
        }
    }

    pub fn code(&self) -> &AuthCode {
        self.code
    }

    fn tag(&self, kc: &KeyCoords, s: &SourceState) -> ResidueElement {
        let v = self.code.v_s_w(s, &kc.w, &kc.x).expect("well-formed state");
        self.code.gray().coordinate(&v, kc.offset)
    }

    fn proj(&self, a: &RingElement, offset: usize) -> ResidueElement {
        self.code.gray().coordinate(a, offset)
    }

    fn state(&self, s0: RingElement, s1: Vec<RingElement>, s2: RingElement) -> SourceState {
        SourceState { s0, s1, s2 }
    }

    fn zero_vec(&self) -> Vec<RingElement> {
        vec![self.code.b().zero(); self.code.n()]
    }

    fn tr_f(&self, theta: &RingElement, x: &[RingElement]) -> RingElement {
        self.code.gamma(theta, &self.zero_vec(), x)
    }

    fn nonzero_socle(a: &RingElement) -> bool {
        !a.is_zero() && a.in_socle()
    }

    fn in_teich_a(&self, b: &RingElement) -> bool {
        self.code.teich_a_in_b().contains(b)
    }

    pub fn construct(&self, k0: Key, k1: Key) -> Result<WitnessReport, VerifyError> {
        if k0 == k1 {
            return Err(VerifyError::SameKey(k0.0));
        }
        let c0 = self.code.key_coords(k0)?;
        let c1 = self.code.key_coords(k1)?;
        let cp = partition(&c0, &c1);
        let plan = self.plan(&cp);

        let mut reason = None;
        match &plan.candidates {
            Ok(cands) => {
                for s in cands {
                    if !self.code.contains_source(s) {
                        reason.get_or_insert(reason::NOT_IN_S);
                        continue;
                    }
                    let t0 = self.tag(&c0, s);
                    let t1 = self.tag(&c1, s);
                    if t0 != t1 {
                        return Ok(WitnessReport {
                            k0,
                            k1,
                            case: cp,
                            planned: plan.leaf,
                            assertion_used: plan.leaf,
                            witness: s.clone(),
                            tags: (Tag(t0), Tag(t1)),
                            fallback_reason: None,
                        });
                    }
                    reason = Some(reason::TAGS_EQUAL);
                }
            }
            Err(why) => reason = Some(why),
        }

        let idx = self
            .oracle
            .first_difference(self.code, k0.0, k1.0)
            .ok_or(VerifyError::NoWitness { k0: k0.0, k1: k1.0 })?;
        let s = self.code.sources()[idx].clone();
        let t0 = self.tag(&c0, &s);
        let t1 = self.tag(&c1, &s);
        if t0 == t1 {
            return Err(VerifyError::NoWitness { k0: k0.0, k1: k1.0 });
        }
        Ok(WitnessReport {
            k0,
            k1,
            case: cp,
            planned: plan.leaf,
            assertion_used: Assertion::BruteForce,
            witness: s,
            tags: (Tag(t0), Tag(t1)),
            fallback_reason: Some(reason.unwrap_or(reason::TAGS_EQUAL).to_string()),
        })
    }

    fn plan(&self, cp: &CasePartition) -> Plan {
        match cp.case {
            Case::I => self.plan_i(cp),
            Case::II => self.plan_ii(cp),
            Case::III => self.plan_iii(cp),
            Case::IV => self.plan_iv(cp),
        }
    }

    fn plan_i(&self, cp: &CasePartition) -> Plan {
        let code = self.code;
        let q = code.q() as usize;
        // lowest base-q digit where the two offsets differ
        let (mut a, mut b, mut digit) = (cp.k00, cp.k10, 0u32);
        while a % q == b % q {
            a /= q;
            b /= q;
            digit += 1;
        }
        let (s0, s1) = self.zero_pair.clone();
        let g = code.gamma(&s0, &s1, &cp.x);
        let target = code.a().p_power(digit);
        let s2 = code.l_representative(&(&target - &g));
        Plan {
            leaf: Assertion::I,
            candidates: Ok(vec![self.state(s0, s1, s2)]),
        }
    }

    fn plan_ii(&self, cp: &CasePartition) -> Plan {
        let code = self.code;
        let b = code.b();
        let n = code.n();
        let j = (0..n).find(|&j| cp.x[j] != cp.y[j]).expect("x != y");
        let d = &cp.x[j] - &cp.y[j];
        let same_offset = cp.k00 == cp.k10;

        if d.in_socle() {
            let theta = self
                .teich_b
                .iter()
                .find(|t| !code.trace(&(*t * &d)).is_zero())
                .cloned();
            let leaf = if same_offset {
                Assertion::II00
            } else {
                Assertion::II10
            };
            let candidates = match theta {
                None => Err(reason::NO_THETA),
                Some(theta) => {
                    let s2 = if same_offset {
                        code.a().zero()
                    } else {
                        code.l_representative(&-&code.trace(&(&theta * &cp.x[j])))
                    };
                    Ok(vec![self.state(b.zero(), unit_vector(b, n, j, &theta), s2)])
                }
            };
            return Plan { leaf, candidates };
        }

        let trx = code.trace(&cp.x[j]);
        let try_ = code.trace(&cp.y[j]);
        if trx != try_ {
            return self.plan_ii011(cp, j, &d);
        }

        // a T-block entry (theta, (zeta + theta p^t) e_j) whose theta p^t
        // separates x_j and y_j under the trace
        let one = b.one();
        let entry = code.sets().t_blocks.iter().flatten().find(|e| {
            let theta = &e.pair.0;
            let admissible = if same_offset {
                !self.in_teich_a(theta)
            } else {
                !self.in_teich_a(theta) || *theta == one
            };
            e.j == j
                && admissible
                && Self::nonzero_socle(&code.trace(&(&(theta * &b.p_power(e.exponent)) * &d)))
        });
        let (leaf_eq, leaf_ne) = if same_offset {
            (Assertion::II0100, Assertion::II0101)
        } else {
            (Assertion::II1100, Assertion::II1101)
        };
        let Some(entry) = entry else {
            return Plan {
                leaf: leaf_eq,
                candidates: Err(reason::NO_T_ENTRY),
            };
        };
        let (theta, s1) = entry.pair.clone();
        let fx = self.tr_f(&theta, &cp.x);
        let fy = self.tr_f(&theta, &cp.y);
        let equal = if same_offset {
            self.proj(&fx, cp.k00) == self.proj(&fy, cp.k10)
        } else {
            code.gray().gray(&fx) == code.gray().gray(&fy)
        };
        if !equal {
            return Plan {
                leaf: leaf_ne,
                candidates: Ok(vec![self.state(theta, self.zero_vec(), code.a().zero())]),
            };
        }
        let g = code.gamma(&theta, &s1, &cp.x);
        let candidates = if same_offset {
            vec![self.state(theta, s1, code.l_representative(&-&g))]
        } else {
            // some s_2 in L works; take the first
            code.sets()
                .l_set
                .iter()
                .map(|s2| self.state(theta.clone(), s1.clone(), s2.clone()))
                .collect()
        };
        Plan {
            leaf: leaf_eq,
            candidates: Ok(candidates),
        }
    }

    /// Shared tail of both Case II branches when `Tr(x_j) != Tr(y_j)`.
    fn plan_ii011(&self, cp: &CasePartition, j: usize, d: &RingElement) -> Plan {
        let code = self.code;
        let b = code.b();
        let n = code.n();
        let one = b.one();
        let fx = self.proj(&self.tr_f(&one, &cp.x), cp.k00);
        let fy = self.proj(&self.tr_f(&one, &cp.y), cp.k10);
        if fx != fy {
            return Plan {
                leaf: Assertion::II0111,
                candidates: Ok(vec![self.state(
                    self.spare_b.clone(),
                    self.zero_vec(),
                    code.a().zero(),
                )]),
            };
        }
        let r = code.a().r();
        let Some(t) = (0..r).find(|&t| Self::nonzero_socle(&code.trace(&(&b.p_power(t) * d))))
        else {
            return Plan {
                leaf: Assertion::II01100,
                candidates: Err(reason::NO_EXPONENT),
            };
        };
        if t == 0 {
            return Plan {
                leaf: Assertion::II01100,
                candidates: Ok(vec![self.state(
                    b.zero(),
                    unit_vector(b, n, j, &one),
                    code.a().zero(),
                )]),
            };
        }
        let eta = &code.eta()[(t as usize - 1) * n + j];
        let s0 = code.ext().embed(eta).expect("eta lies in A");
        let s1 = unit_vector(b, n, j, &b.p_power(t));
        let g = code.gamma(&s0, &s1, &cp.x);
        let first = code.l_representative(&-&g);
        let mut candidates = vec![self.state(s0.clone(), s1.clone(), first.clone())];
        candidates.extend(
            code.sets()
                .l_set
                .iter()
                .filter(|s2| **s2 != first)
                .map(|s2| self.state(s0.clone(), s1.clone(), s2.clone())),
        );
        Plan {
            leaf: Assertion::II01101,
            candidates: Ok(candidates),
        }
    }

    fn plan_iii(&self, cp: &CasePartition) -> Plan {
        let code = self.code;
        if cp.k00 == cp.k10 {
            return Plan {
                leaf: Assertion::III0,
                candidates: Ok(vec![code.sources()[0].clone()]),
            };
        }
        let (s0, s1) = self.zero_pair.clone();
        let g = code.gamma(&s0, &s1, &cp.x);
        let t0 = self.proj(&(&g + &cp.w0), cp.k00);
        let t1 = self.proj(&(&g + &cp.w1), cp.k10);
        if t0 == t1 {
            let s2 = code.l_representative(&-&g);
            Plan {
                leaf: Assertion::III10,
                candidates: Ok(vec![self.state(s0, s1, s2)]),
            }
        } else {
            Plan {
                leaf: Assertion::III11,
                candidates: Ok(vec![self.state(s0, s1, code.a().zero())]),
            }
        }
    }

    fn plan_iv(&self, cp: &CasePartition) -> Plan {
        let code = self.code;
        let one = code.b().one();
        let fx = self.proj(&self.tr_f(&one, &cp.x), cp.k00);
        let fy = self.proj(&self.tr_f(&one, &cp.y), cp.k10);
        if fx == fy {
            return Plan {
                leaf: Assertion::IV0,
                candidates: Ok(vec![self.state(
                    self.spare_b.clone(),
                    self.zero_vec(),
                    code.a().zero(),
                )]),
            };
        }
        let eta_b: Vec<RingElement> = code
            .eta()
            .iter()
            .map(|e| code.ext().embed(e).expect("eta lies in A"))
            .collect();
        let candidates = code
            .teich_a_in_b()
            .iter()
            .filter(|c| !c.is_zero() && !eta_b.contains(c))
            .map(|c| self.state(c.clone(), self.zero_vec(), code.a().zero()))
            .collect();
        Plan {
            leaf: Assertion::IV1,
            candidates: Ok(candidates),
        }
    }
}
