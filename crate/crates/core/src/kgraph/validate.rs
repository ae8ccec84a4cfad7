use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::degree::Degree;
use super::graph::{EdgeId, KGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ValidationCheck {
    pub check: String,
    pub pass: bool,
    pub generators_tested: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ValidationReport {
    pub pass: bool,
    pub bound: Degree,
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn failed(&self) -> impl Iterator<Item = &ValidationCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Tally {
    name: &'static str,
    tested: usize,
    witness: Option<(Vec<String>, String)>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, tested: 0, witness: None }
    }

    fn fail(&mut self, word: Vec<String>, why: String) {
        if self.witness.is_none() {
            self.witness = Some((word, why));
        }
    }

    fn finish(self) -> ValidationCheck {
        let pass = self.witness.is_none();
        let (witness, message) = match self.witness {
            Some((w, m)) => (Some(w), Some(m)),
            None => (None, None),
        };
        ValidationCheck { check: self.name.into(), pass, generators_tested: self.tested, witness, message }
    }
}

/// Outcome of exploring every swap sequence from one word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Terminal {
    Normal(Vec<EdgeId>),
    Stuck(Vec<EdgeId>),
}

impl KGraph {
    /// Run V1–V4 and mark the graph validated when all pass.
    pub fn validate(&mut self, bound: &Degree) -> ValidationReport {
        let report = self.check(bound);
        self.set_validated(report.pass);
        report
    }

    /// Run V1–V4 without touching the validated flag.
    pub fn check(&self, bound: &Degree) -> ValidationReport {
        let checks = vec![self.check_v1(), self.check_v2(), self.check_v3(), self.check_v4(bound)];
        ValidationReport { pass: checks.iter().all(|c| c.pass), bound: bound.clone(), checks }
    }

    fn check_v1(&self) -> ValidationCheck {
        let mut t = Tally::new("V1");
        for (x, y) in self.distinct_color_pairs() {
            t.tested += 1;
            if !self.swap_table().contains_key(&(x, y)) {
                t.fail(self.word_names(&[x, y]), "composable word lies in no square".into());
            }
        }
        t.finish()
    }

    fn check_v2(&self) -> ValidationCheck {
        let mut t = Tally::new("V2");
        for &(a, b, b2, a2) in self.squares() {
            t.tested += 1;
            let (ea, eb, eb2, ea2) = (self.edge(a), self.edge(b), self.edge(b2), self.edge(a2));
            let word = self.word_names(&[a, b]);
            if ea.color == eb.color {
                t.fail(word, "square sides must have two distinct colors".into());
            } else if eb2.color != eb.color || ea2.color != ea.color {
                t.fail(word, "square sides have mismatched colors".into());
            } else if ea.source != eb.range || eb2.source != ea2.range {
                t.fail(word, "square side is not composable".into());
            } else if ea.range != eb2.range || eb.source != ea2.source {
                t.fail(word, "square sides have different endpoints".into());
            }
        }
        for (&side, &img) in self.swap_table() {
            if self.swap_table().get(&img) != Some(&side) {
                t.fail(self.word_names(&[side.0, side.1]), "swap is not an involution".into());
            }
        }
        t.finish()
    }

    fn check_v3(&self) -> ValidationCheck {
        let mut t = Tally::new("V3");
        if self.k() < 3 {
            return t.finish();
        }
        for (x, y) in self.distinct_color_pairs() {
            let (cx, cy) = (self.color(x), self.color(y));
            for c in 1..=self.k() {
                if c == cx || c == cy {
                    continue;
                }
                for &z in self.edges_at(self.edge(y).source, c) {
                    t.tested += 1;
                    let word = [x, y, z];
                    let a = self.swap_sequence(&word, &[0, 1, 0]);
                    let b = self.swap_sequence(&word, &[1, 0, 1]);
                    match (a, b) {
                        (Some(a), Some(b)) if a == b => {}
                        (Some(a), Some(b)) => t.fail(
                            self.word_names(&word),
                            format!(
                                "hexagon fails: {:?} vs {:?}",
                                self.word_names(&a),
                                self.word_names(&b)
                            ),
                        ),
                        _ => t.fail(self.word_names(&word), "missing square during hexagon".into()),
                    }
                }
            }
        }
        t.finish()
    }

    fn swap_sequence(&self, word: &[EdgeId], positions: &[usize]) -> Option<Vec<EdgeId>> {
        let mut w = word.to_vec();
        for &p in positions {
            let (x, y) = self.swap_pair(w[p], w[p + 1]).ok()?;
            w[p] = x;
            w[p + 1] = y;
        }
        Some(w)
    }

    fn check_v4(&self, bound: &Degree) -> ValidationCheck {
        let mut t = Tally::new("V4");
        let mut memo: HashMap<Vec<EdgeId>, BTreeSet<Terminal>> = HashMap::new();
        for word in self.words_up_to(bound) {
            if word.len() < 2 {
                continue;
            }
            t.tested += 1;
            let ends = self.terminals(&word, &mut memo);
            if ends.len() != 1 || matches!(ends.iter().next(), Some(Terminal::Stuck(_))) {
                let msg = if ends.iter().any(|e| matches!(e, Terminal::Stuck(_))) {
                    "normalization gets stuck on a missing square".to_string()
                } else {
                    format!("{} distinct normal forms", ends.len())
                };
                t.fail(self.word_names(&word), msg);
            }
        }
        t.finish()
    }

    fn terminals(
        &self,
        word: &[EdgeId],
        memo: &mut HashMap<Vec<EdgeId>, BTreeSet<Terminal>>,
    ) -> BTreeSet<Terminal> {
        if let Some(hit) = memo.get(word) {
            return hit.clone();
        }
        let mut out = BTreeSet::new();
        let mut descended = false;
        for j in 0..word.len() - 1 {
            if self.color(word[j]) > self.color(word[j + 1]) {
                descended = true;
                match self.swap_pair(word[j], word[j + 1]) {
                    Ok((x, y)) => {
                        let mut next = word.to_vec();
                        next[j] = x;
                        next[j + 1] = y;
                        out.extend(self.terminals(&next, memo));
                    }
                    Err(_) => {
                        out.insert(Terminal::Stuck(word.to_vec()));
                    }
                }
            }
        }
        if !descended {
            out.insert(Terminal::Normal(word.to_vec()));
        }
        memo.insert(word.to_vec(), out.clone());
        out
    }
}
