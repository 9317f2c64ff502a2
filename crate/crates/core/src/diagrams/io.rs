//! JSON diagram files:
//!
//! ```json
//! {"circles": [["1", "2", "3", "4"]],
//!  "parts": [{"sites": ["1", "3"]}, {"sites": ["2", "4"], "order": ["4", "2"]}]}
//! ```
//!
//! `order` is the cyclic order of the part and defaults to `sites`. Site
//! identifiers may be strings or integers. An optional `multiplicities` map
//! annotates sites of higher-order diagrams.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ChordDiagram, DiagramError};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SiteLabel {
    Name(String),
    Number(u64),
}

impl SiteLabel {
    pub fn into_string(self) -> String {
        match self {
            SiteLabel::Name(s) => s,
            SiteLabel::Number(n) => n.to_string(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartSpec {
    pub sites: Vec<SiteLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<SiteLabel>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramSpec {
    pub circles: Vec<Vec<SiteLabel>>,
    pub parts: Vec<PartSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub multiplicities: BTreeMap<String, u32>,
}

fn strings(v: Vec<SiteLabel>) -> Vec<String> {
    v.into_iter().map(SiteLabel::into_string).collect()
}

impl DiagramSpec {
    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))
    }

    pub fn validate(self) -> Result<ChordDiagram, DiagramError> {
        let circles = self.circles.into_iter().map(strings).collect();
        let parts = self
            .parts
            .into_iter()
            .enumerate()
            .map(|(index, part)| {
                let sites = strings(part.sites);
                let Some(order) = part.order else {
                    return Ok(sites);
                };
                let order = strings(order);
                let (mut a, mut b) = (sites.clone(), order.clone());
                a.sort();
                b.sort();
                if a != b {
                    return Err(DiagramError::BadOrder(index));
                }
                Ok(order)
            })
            .collect::<Result<_, _>>()?;
        ChordDiagram::with_multiplicities(circles, parts, self.multiplicities)
    }
}

impl ChordDiagram {
    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        DiagramSpec::from_json(text)?.validate()
    }

    pub fn to_spec(&self) -> DiagramSpec {
        let label = |s: &str| SiteLabel::Name(s.to_string());
        DiagramSpec {
            circles: self.circles().map(|c| c.into_iter().map(label).collect()).collect(),
            parts: self.parts().map(|p| PartSpec { sites: p.into_iter().map(label).collect(), order: None }).collect(),
            multiplicities: (0..self.site_count())
                .filter(|&s| self.multiplicity(s) != 1)
                .map(|s| (self.label(s).to_string(), self.multiplicity(s)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numbers_and_orders() {
        let d = ChordDiagram::from_json(
            r#"{"circles": [[1, 2, 3, 4]], "parts": [{"sites": [1, 3]}, {"sites": ["2", "4"], "order": [4, 2]}]}"#,
        )
        .unwrap();
        assert_eq!(d.surgery_outputs().output_count, 1);
        assert_eq!(d.parts().nth(1).unwrap(), vec!["4", "2"]);
    }

    #[test]
    fn rejects_bad_files() {
        let bad_order = r#"{"circles": [[1, 2]], "parts": [{"sites": [1, 2], "order": [1, 3]}]}"#;
        assert_eq!(ChordDiagram::from_json(bad_order).unwrap_err(), DiagramError::BadOrder(0));
        assert!(matches!(ChordDiagram::from_json("{\"circles\": 3}"), Err(DiagramError::Json(_))));
        let singleton = r#"{"circles": [[1]], "parts": [{"sites": [1]}]}"#;
        assert!(matches!(ChordDiagram::from_json(singleton), Err(DiagramError::InvalidPart { .. })));
    }

    #[test]
    fn spec_round_trip() {
        let d = super::super::DiagramPreset::V.build().unwrap();
        let json = serde_json::to_string(&d.to_spec()).unwrap();
        let back = ChordDiagram::from_json(&json).unwrap();
        assert!(back.is_isomorphic(&d));
    }
}
