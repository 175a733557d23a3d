use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use rattrig::solver::{Candidate, Completion};
use rattrig::{complete_triangle, FieldElement, FieldSpec, KnownValues};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateOutput {
    pub branch: String,
    pub quadrances: Option<[String; 3]>,
    pub quadrance_ratios: Option<[String; 3]>,
    pub spreads: [Option<String>; 3],
    pub quadrea: Option<String>,
    pub area_sq: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateOutput {
    pub equation: String,
    pub discriminant: String,
    pub roots: Vec<String>,
    pub double_root: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutput {
    pub field: String,
    pub pattern: String,
    pub candidates: Vec<CandidateOutput>,
    pub certificates: Vec<CertificateOutput>,
}

fn candidate_output(c: &Candidate<FieldElement>) -> CandidateOutput {
    let s = |x: &FieldElement| x.to_string();
    CandidateOutput {
        branch: c.branch.clone(),
        quadrances: c.quadrances.as_ref().map(|q| q.as_array().map(s)),
        quadrance_ratios: c.ratios.as_ref().map(|q| q.as_array().map(s)),
        spreads: c.spreads.each_ref().map(|x| x.as_ref().map(s)),
        quadrea: c.quadrea.as_ref().map(s),
        area_sq: c.area_sq.as_ref().map(s),
    }
}

impl SolveOutput {
    fn new(field: &FieldSpec, done: &Completion<FieldElement>) -> Self {
        SolveOutput {
            field: field.to_string(),
            pattern: done.pattern.to_string(),
            candidates: done.candidates.iter().map(candidate_output).collect(),
            certificates: done
                .certificates
                .iter()
                .map(|c| CertificateOutput {
                    equation: c.equation.clone(),
                    discriminant: c.solutions.discriminant.to_string(),
                    roots: c.solutions.roots.iter().map(ToString::to_string).collect(),
                    double_root: c.solutions.is_double_root(),
                })
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field    {}", self.field);
        let _ = writeln!(out, "pattern  {}", self.pattern);
        for c in &self.certificates {
            let _ = writeln!(
                out,
                "{}: discriminant {}, roots {{{}}}{}",
                c.equation,
                c.discriminant,
                c.roots.join(", "),
                if c.double_root { " (double)" } else { "" }
            );
        }
        let opt = |x: &Option<String>| x.clone().unwrap_or_else(|| "?".into());
        for (n, c) in self.candidates.iter().enumerate() {
            let _ = writeln!(out, "candidate {} [{}]", n + 1, c.branch);
            if let Some([a, b, d]) = &c.quadrances {
                let _ = writeln!(out, "  Q1 = {a}, Q2 = {b}, Q3 = {d}");
            }
            if let Some([a, b, d]) = &c.quadrance_ratios {
                let _ = writeln!(out, "  Q1 : Q2 : Q3 = {a} : {b} : {d}");
            }
            let [s1, s2, s3] = &c.spreads;
            let _ = writeln!(out, "  s1 = {}, s2 = {}, s3 = {}", opt(s1), opt(s2), opt(s3));
            if let (Some(a), Some(q)) = (&c.area_sq, &c.quadrea) {
                let _ = writeln!(out, "  quadrea = {q}, area^2 = {a}");
            }
        }
        out
    }
}

pub fn solve(field: &FieldSpec, known: &KnownValues<FieldElement>) -> Result<SolveOutput, CliError> {
    let done = complete_triangle(known)?;
    Ok(SolveOutput::new(field, &done))
}
