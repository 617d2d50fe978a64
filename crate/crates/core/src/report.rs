//! Agreement reports: the decision pipeline versus the exhaustive oracle.
//!
//! A report is one JSON document per corpus run: one row per graph with
//! both verdict labels, an agreement flag, the deterministic cost pair,
//! and a trace reference for every row that needs auditing, plus a
//! confusion matrix over the conclusive oracle outcomes. Rows where the
//! oracle ran out of budget stay out of the matrix and are counted
//! separately.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionMatrix {
    pub ham_ham: u64,
    pub ham_nonham: u64,
    pub nonham_ham: u64,
    pub nonham_nonham: u64,
    pub incomplete_ham: u64,
    pub incomplete_nonham: u64,
}

impl ConfusionMatrix {
    pub fn total(&self) -> u64 {
        self.ham_ham
            + self.ham_nonham
            + self.nonham_ham
            + self.nonham_nonham
            + self.incomplete_ham
            + self.incomplete_nonham
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementRow {
    pub id: String,
    /// Flat verdict label from the pipeline.
    pub method: String,
    /// "hamiltonian", "non_hamiltonian", or "budget_exceeded".
    pub oracle: String,
    /// `None` when the oracle was inconclusive.
    pub agree: Option<bool>,
    pub method_steps: u64,
    pub oracle_expansions: u64,
    /// File name of the stored replayable trace, for rows that disagree
    /// or ended incomplete.
    pub trace_ref: Option<String>,
}

impl AgreementRow {
    /// Rows the harness exists to surface: conclusive disagreements and
    /// runs the method could not finish.
    pub fn is_discrepancy(&self) -> bool {
        self.agree == Some(false)
            || (self.method == "method_incomplete" && self.oracle != "budget_exceeded")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub corpus_size: usize,
    /// Graphs rejected during corpus generation before any run.
    pub filtered_during_generation: usize,
    pub matrix: ConfusionMatrix,
    pub oracle_inconclusive: u64,
    pub rows: Vec<AgreementRow>,
}

impl AgreementReport {
    pub fn render(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn parse(text: &str) -> serde_json::Result<AgreementReport> {
        serde_json::from_str(text)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &AgreementRow> {
        self.rows.iter().filter(|r| r.is_discrepancy())
    }

    /// Structural soundness of the report itself.
    pub fn check_invariants(&self) -> Result<(), String> {
        if self.rows.len() != self.corpus_size {
            return Err(format!(
                "{} rows for corpus size {}",
                self.rows.len(),
                self.corpus_size
            ));
        }
        let total = self.matrix.total() + self.oracle_inconclusive;
        if total != self.corpus_size as u64 {
            return Err(format!(
                "matrix cells plus inconclusive sum to {total}, corpus size is {}",
                self.corpus_size
            ));
        }
        for row in &self.rows {
            let inconclusive = row.oracle == "budget_exceeded";
            if inconclusive != row.agree.is_none() {
                return Err(format!(
                    "row {}: agreement flag does not match oracle conclusiveness",
                    row.id
                ));
            }
        }
        Ok(())
    }
}
