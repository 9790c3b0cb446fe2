//! Serde document schemas for the structured input and output formats:
//! Arthur parameters, per-block local Satake data, and unitary-dual points.
//! Exponents travel as exact rational strings ("3/10", "0"); characters as
//! "1", "lambda0", or a label with an optional "^-1" suffix.

use serde::{Deserialize, Serialize};

use crate::arthur::{ArthurParameter, DualType, LocalSatakeData, SatakeEntry, SimpleParameter};
use crate::dual::{ETriple, JordanBlock, NegativeData, StronglyNegativeData, UnitaryDualPoint};
use crate::error::{Error, Result};
use crate::squareclass::SquareClass;
use crate::Rational;

pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?;
    let den: i64 = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {text:?}")))?;
    if den == 0 {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn show_rational(value: &Rational) -> String {
    if *value.denom() == 1 {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PsiDoc {
    pub n: u32,
    pub blocks: Vec<BlockDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlockDoc {
    pub tau_id: String,
    pub gl_rank: u32,
    pub b: u32,
    pub dual_type: String,
    pub central_class: i64,
}

impl TryFrom<&PsiDoc> for ArthurParameter {
    type Error = Error;

    fn try_from(doc: &PsiDoc) -> Result<ArthurParameter> {
        let mut blocks = Vec::with_capacity(doc.blocks.len());
        for block in &doc.blocks {
            let dual_type = match block.dual_type.to_ascii_lowercase().as_str() {
                "symplectic" => DualType::Symplectic,
                "orthogonal" => DualType::Orthogonal,
                other => {
                    return Err(Error::Parse(format!(
                        "dual_type must be symplectic or orthogonal, got {other:?}"
                    )))
                }
            };
            blocks.push(SimpleParameter {
                tau_id: block.tau_id.clone(),
                gl_rank: block.gl_rank,
                b: block.b,
                dual_type,
                central_class: SquareClass::new(block.central_class)?,
            });
        }
        Ok(ArthurParameter::new(doc.n, blocks))
    }
}

impl From<&ArthurParameter> for PsiDoc {
    fn from(psi: &ArthurParameter) -> PsiDoc {
        PsiDoc {
            n: psi.n,
            blocks: psi
                .blocks
                .iter()
                .map(|b| BlockDoc {
                    tau_id: b.tau_id.clone(),
                    gl_rank: b.gl_rank,
                    b: b.b,
                    dual_type: match b.dual_type {
                        DualType::Symplectic => "symplectic".into(),
                        DualType::Orthogonal => "orthogonal".into(),
                    },
                    central_class: b.central_class.value(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LocalDoc {
    pub blocks: Vec<Vec<EntryDoc>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EntryDoc {
    pub character: String,
    pub exponent: String,
}

impl TryFrom<&LocalDoc> for LocalSatakeData {
    type Error = Error;

    fn try_from(doc: &LocalDoc) -> Result<LocalSatakeData> {
        let mut blocks = Vec::with_capacity(doc.blocks.len());
        for entries in &doc.blocks {
            let mut converted = Vec::with_capacity(entries.len());
            for entry in entries {
                converted.push(SatakeEntry::new(
                    entry.character.parse()?,
                    parse_rational(&entry.exponent)?,
                ));
            }
            blocks.push(converted);
        }
        Ok(LocalSatakeData::new(blocks))
    }
}

impl From<&LocalSatakeData> for LocalDoc {
    fn from(local: &LocalSatakeData) -> LocalDoc {
        LocalDoc {
            blocks: local
                .blocks
                .iter()
                .map(|entries| {
                    entries
                        .iter()
                        .map(|e| EntryDoc {
                            character: e.character.to_string(),
                            exponent: show_rational(&e.exponent),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointDoc {
    pub n: u32,
    pub e: Vec<TripleDoc>,
    pub negative: NegativeDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleDoc {
    pub character: String,
    pub m: u32,
    pub alpha: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NegativeDoc {
    pub strongly_negative: SnDoc,
    #[serde(default)]
    pub gl_blocks: Vec<GlBlockDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SnDoc {
    #[serde(default)]
    pub lambda0_sizes: Vec<u32>,
    pub trivial_sizes: Vec<u32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GlBlockDoc {
    pub character: String,
    pub size: u32,
}

impl TryFrom<&PointDoc> for UnitaryDualPoint {
    type Error = Error;

    fn try_from(doc: &PointDoc) -> Result<UnitaryDualPoint> {
        let sn = StronglyNegativeData::new(
            doc.negative.strongly_negative.lambda0_sizes.clone(),
            doc.negative.strongly_negative.trivial_sizes.clone(),
        )?;
        let mut gl_blocks = Vec::with_capacity(doc.negative.gl_blocks.len());
        for block in &doc.negative.gl_blocks {
            gl_blocks.push(JordanBlock::new(block.character.parse()?, block.size));
        }
        let mut e = Vec::with_capacity(doc.e.len());
        for triple in &doc.e {
            e.push(ETriple::new(
                triple.character.parse()?,
                triple.m,
                parse_rational(&triple.alpha)?,
            ));
        }
        UnitaryDualPoint::new(doc.n, e, NegativeData::new(sn, gl_blocks))
    }
}

impl From<&UnitaryDualPoint> for PointDoc {
    fn from(point: &UnitaryDualPoint) -> PointDoc {
        PointDoc {
            n: point.n,
            e: point
                .e
                .iter()
                .map(|t| TripleDoc {
                    character: t.character.to_string(),
                    m: t.m,
                    alpha: show_rational(&t.alpha),
                })
                .collect(),
            negative: NegativeDoc {
                strongly_negative: SnDoc {
                    lambda0_sizes: point.neg.sn.lambda0_sizes().to_vec(),
                    trivial_sizes: point.neg.sn.trivial_sizes().to_vec(),
                },
                gl_blocks: point
                    .neg
                    .gl_blocks
                    .iter()
                    .map(|b| GlBlockDoc {
                        character: b.character.to_string(),
                        size: b.size,
                    })
                    .collect(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for text in ["3/10", "0", "1/4", "-2/5"] {
            let value = parse_rational(text).unwrap();
            assert_eq!(parse_rational(&show_rational(&value)).unwrap(), value);
        }
        assert_eq!(parse_rational("2/4").unwrap(), Rational::new(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn psi_doc_round_trip() {
        let json = r#"{
            "n": 4,
            "blocks": [
                {"tau_id": "tau", "gl_rank": 4, "b": 2, "dual_type": "symplectic", "central_class": 1},
                {"tau_id": "one", "gl_rank": 1, "b": 1, "dual_type": "orthogonal", "central_class": 1}
            ]
        }"#;
        let doc: PsiDoc = serde_json::from_str(json).unwrap();
        let psi = ArthurParameter::try_from(&doc).unwrap();
        psi.validate().unwrap();
        let back = PsiDoc::from(&psi);
        let again = ArthurParameter::try_from(&back).unwrap();
        assert_eq!(psi, again);
    }

    #[test]
    fn point_doc_round_trip() {
        let json = r#"{
            "n": 3,
            "e": [
                {"character": "chi", "m": 1, "alpha": "1/4"},
                {"character": "chi^-1", "m": 1, "alpha": "1/4"}
            ],
            "negative": {
                "strongly_negative": {"lambda0_sizes": [], "trivial_sizes": [1]},
                "gl_blocks": [{"character": "chi", "size": 1}]
            }
        }"#;
        let doc: PointDoc = serde_json::from_str(json).unwrap();
        let point = UnitaryDualPoint::try_from(&doc).unwrap();
        assert_eq!(point.n, 3);
        let back = PointDoc::from(&point);
        let again = UnitaryDualPoint::try_from(&back).unwrap();
        assert_eq!(point, again);
    }
}
