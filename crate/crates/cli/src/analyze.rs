use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use rattrig::planar::Degeneracy;
use rattrig::{analyze_triangle, DynPoint, DynReport, FieldElement, FieldSpec};

use crate::error::CliError;

/// JSON shape of an analysis. Field order is the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub field: String,
    pub points: Vec<[String; 2]>,
    pub quadrances: [String; 3],
    pub spreads: Option<[String; 3]>,
    pub quadrea: String,
    pub area_sq: String,
    pub collinear: bool,
    pub degeneracies: Vec<String>,
}

impl AnalyzeOutput {
    pub fn from_report(field: &FieldSpec, report: &DynReport) -> Self {
        let s = |x: &FieldElement| x.to_string();
        AnalyzeOutput {
            field: field.to_string(),
            points: report.points.iter().map(|p| [s(&p.x), s(&p.y)]).collect(),
            quadrances: report.quadrances.as_array().map(s),
            spreads: report.spreads.as_ref().map(|t| t.as_array().map(s)),
            quadrea: s(&report.quadrea),
            area_sq: s(&report.area_sq),
            collinear: report.collinear,
            degeneracies: report.degeneracies.iter().map(Degeneracy::to_string).collect(),
        }
    }

    /// Re-parses every value, checking that each string is canonical.
    pub fn validate(&self) -> Result<(), CliError> {
        let field: FieldSpec = self.field.parse()?;
        let values = self
            .points
            .iter()
            .flatten()
            .chain(&self.quadrances)
            .chain(self.spreads.iter().flatten())
            .chain([&self.quadrea, &self.area_sq]);
        for text in values {
            let value: FieldElement = text.parse()?;
            if value.field() != field || value.to_string() != *text {
                return Err(CliError::Parse(format!("{text:?} is not a canonical {field} value")));
            }
        }
        for tag in &self.degeneracies {
            tag.parse::<Degeneracy>().map_err(CliError::Parse)?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let points: Vec<String> = self.points.iter().map(|[x, y]| format!("[{x}, {y}]")).collect();
        let _ = writeln!(out, "field         {}", self.field);
        let _ = writeln!(out, "points        {}", points.join(" "));
        let _ = writeln!(out, "quadrances    Q1 = {}, Q2 = {}, Q3 = {}", self.quadrances[0], self.quadrances[1], self.quadrances[2]);
        match &self.spreads {
            Some([s1, s2, s3]) => {
                let _ = writeln!(out, "spreads       s1 = {s1}, s2 = {s2}, s3 = {s3}");
            }
            None => {
                let _ = writeln!(out, "spreads       undefined (null line)");
            }
        }
        let _ = writeln!(out, "quadrea       {}", self.quadrea);
        let _ = writeln!(out, "area^2        {}", self.area_sq);
        let _ = writeln!(out, "collinear     {}", if self.collinear { "yes" } else { "no" });
        if !self.degeneracies.is_empty() {
            let _ = writeln!(out, "degeneracies  {}", self.degeneracies.join(" "));
        }
        out
    }
}

pub fn analyze(field: &FieldSpec, points: [DynPoint; 3]) -> Result<AnalyzeOutput, CliError> {
    if let Some(p) = points.iter().find(|p| p.x.field() != *field || p.y.field() != *field) {
        return Err(CliError::Config(format!("point {p} is not over {field}")));
    }
    let report = analyze_triangle(points)?;
    Ok(AnalyzeOutput::from_report(field, &report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_triangle;

    fn run(field: &str, points: &str) -> Result<AnalyzeOutput, CliError> {
        let field: FieldSpec = field.parse().unwrap();
        analyze(&field, parse_triangle(&field, points).unwrap())
    }

    #[test]
    fn worked_triangle_json() {
        let out = run("rational", "0,0 7,5 2,8").unwrap();
        let json = serde_json::to_string(&out).unwrap();
        assert_eq!(
            json,
            r#"{"field":"rational","points":[["0","0"],["7","5"],["2","8"]],"quadrances":["34","68","74"],"spreads":["529/1258","529/629","529/578"],"quadrea":"8464","area_sq":"529","collinear":false,"degeneracies":[]}"#
        );
        out.validate().unwrap();
    }

    #[test]
    fn isotropic_mod_13() {
        let out = run("fp:13", "0,0 1,5 2,3").unwrap();
        assert!(out.degeneracies.contains(&"isotropic_segment:3".to_string()));
        assert!(out.spreads.is_none());
        assert_eq!(out.quadrances[2], "0 mod 13");
        out.validate().unwrap();
    }

    #[test]
    fn collinear_and_duplicates() {
        assert!(run("rational", "0,0 1,1 2,2").unwrap().collinear);
        let err = run("rational", "0,0 1,1 0,0").unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn validation_rejects_non_canonical_values() {
        let mut out = run("rational", "0,0 7,5 2,8").unwrap();
        out.quadrea = "16928/2".into();
        assert!(out.validate().is_err());
    }

    #[test]
    fn text_rendering() {
        let text = run("rational", "0,0 7,5 2,8").unwrap().to_text();
        assert!(text.contains("Q1 = 34, Q2 = 68, Q3 = 74"));
        assert!(text.contains("area^2        529"));
    }
}
