use serde::{Deserialize, Serialize};

use super::degree::Degree;
use super::graph::KGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FinitenessReport {
    pub finite: bool,
    pub probe_bound: Degree,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
}

impl KGraph {
    /// False, with a witness word, as soon as some morphism has a degree
    /// coordinate beyond `probe`.
    pub fn is_finite_category(&self, probe: &Degree) -> FinitenessReport {
        for c in 1..=self.k() {
            let colors = vec![c; probe.get(c) as usize + 1];
            if let Some(w) = self.find_word_with_colors(&colors) {
                return FinitenessReport {
                    finite: false,
                    probe_bound: probe.clone(),
                    witness: Some(self.word_names(&w)),
                };
            }
        }
        FinitenessReport { finite: true, probe_bound: probe.clone(), witness: None }
    }
}
