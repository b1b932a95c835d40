//! Per-rule verdicts and counterexamples shared by every checker.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// How many counterexamples are kept per rule; counts are always exact.
pub const KEEP_PER_RULE: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Failure {
    /// A decided instance came out wrong.
    Refuted,
    /// An existential had no witness within the search bound.
    Unwitnessed,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Counterexample {
    pub rule: &'static str,
    pub kind: Failure,
    pub codes: Vec<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RuleVerdict {
    pub rule: &'static str,
    pub checked: u64,
    pub refuted: u64,
    pub unwitnessed: u64,
}

impl RuleVerdict {
    pub fn passed(&self) -> bool {
        self.refuted == 0 && self.unwitnessed == 0
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AxiomReport {
    pub rules: Vec<RuleVerdict>,
    pub counterexamples: Vec<Counterexample>,
    /// Number of sampled tuples, or of exhausted instances.
    pub samples: u64,
}

impl AxiomReport {
    pub fn new(rules: &[&'static str]) -> Self {
        AxiomReport {
            rules: rules
                .iter()
                .map(|&rule| RuleVerdict {
                    rule,
                    checked: 0,
                    refuted: 0,
                    unwitnessed: 0,
                })
                .collect(),
            counterexamples: Vec::new(),
            samples: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn rule(&self, rule: &str) -> Option<&RuleVerdict> {
        self.rules.iter().find(|r| r.rule == rule)
    }

    fn slot(&mut self, rule: &'static str) -> &mut RuleVerdict {
        if let Some(i) = self.rules.iter().position(|r| r.rule == rule) {
            &mut self.rules[i]
        } else {
            self.rules.push(RuleVerdict {
                rule,
                checked: 0,
                refuted: 0,
                unwitnessed: 0,
            });
            self.rules.last_mut().unwrap()
        }
    }

    pub fn pass(&mut self, rule: &'static str) {
        self.slot(rule).checked += 1;
    }

    /// Records one instance; `codes` is only built on failure.
    pub fn check(&mut self, rule: &'static str, ok: bool, codes: impl FnOnce() -> Vec<String>) {
        if ok {
            self.pass(rule);
        } else {
            self.fail(rule, Failure::Refuted, codes());
        }
    }

    pub fn fail(&mut self, rule: &'static str, kind: Failure, codes: Vec<String>) {
        let v = self.slot(rule);
        v.checked += 1;
        match kind {
            Failure::Refuted => v.refuted += 1,
            Failure::Unwitnessed => v.unwitnessed += 1,
        }
        let kept = self.counterexamples.iter().filter(|c| c.rule == rule).count();
        if kept < KEEP_PER_RULE {
            self.counterexamples.push(Counterexample { rule, kind, codes });
        }
    }

    pub fn refutations(&self) -> u64 {
        self.rules.iter().map(|r| r.refuted).sum()
    }

    pub fn unwitnessed(&self) -> u64 {
        self.rules.iter().map(|r| r.unwitnessed).sum()
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for r in other.rules {
            let v = self.slot(r.rule);
            v.checked += r.checked;
            v.refuted += r.refuted;
            v.unwitnessed += r.unwitnessed;
        }
        for c in other.counterexamples {
            let kept = self.counterexamples.iter().filter(|x| x.rule == c.rule).count();
            if kept < KEEP_PER_RULE {
                self.counterexamples.push(c);
            }
        }
        self.samples += other.samples;
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<22} {:>10} {:>8} {:>11}",
            "rule", "checked", "refuted", "unwitnessed"
        )?;
        for r in &self.rules {
            writeln!(
                f,
                "{:<22} {:>10} {:>8} {:>11}",
                r.rule, r.checked, r.refuted, r.unwitnessed
            )?;
        }
        for c in &self.counterexamples {
            let kind = match c.kind {
                Failure::Refuted => "refuted",
                Failure::Unwitnessed => "unwitnessed",
            };
            write!(f, "  {kind} {}:", c.rule)?;
            for code in &c.codes {
                write!(f, " {code}")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}
