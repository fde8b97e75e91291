//! Canonical JSON and text forms of every object kind.
//!
//! Codes are plain text (`110100`, `3,0,0`); structures are single-line JSON
//! objects tagged by `kind`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Diagram};
use crate::matching::{ColoredMatching, Matching, MatchingError};
use crate::polygon::{Edge, PolygonError};
use crate::seqcore::{CodeError, MatchingCode, TriangulationCode};
use crate::tiling::{Tiling, TilingError};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Matching,
    CodeB,
    CodeD,
    Triangulation,
    Tiling,
    Diagram,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::Matching,
        Kind::CodeB,
        Kind::CodeD,
        Kind::Triangulation,
        Kind::Tiling,
        Kind::Diagram,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Matching => "matching",
            Kind::CodeB => "code-b",
            Kind::CodeD => "code-d",
            Kind::Triangulation => "triangulation",
            Kind::Tiling => "tiling",
            Kind::Diagram => "diagram",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = EnvelopeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| EnvelopeError::Syntax(format!("unknown kind {s:?}")))
    }
}

/// Input that could not be read at all, versus input that was read but
/// describes an invalid object.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvelopeError {
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl EnvelopeError {
    pub fn is_syntax(&self) -> bool {
        matches!(
            self,
            EnvelopeError::Syntax(_) | EnvelopeError::Code(CodeError::Parse(_))
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum Wire {
    Matching {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        edges: Vec<Edge>,
    },
    CodeB {
        code: String,
    },
    CodeD {
        code: String,
    },
    Triangulation {
        npoints: usize,
        diagonals: Vec<Edge>,
    },
    Tiling {
        t: usize,
        npoints: usize,
        diagonals: Vec<Edge>,
    },
    Diagram {
        rows: usize,
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        edges: Vec<Edge>,
    },
}

/// A validated object of any kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    /// With `Some(k)` the matching is known to be `k`-colored.
    Matching(Matching, Option<usize>),
    CodeB(MatchingCode),
    CodeD(TriangulationCode),
    Triangulation(Triangulation),
    Tiling(Tiling),
    Diagram(Diagram),
}

impl Object {
    pub fn kind(&self) -> Kind {
        match self {
            Object::Matching(..) => Kind::Matching,
            Object::CodeB(_) => Kind::CodeB,
            Object::CodeD(_) => Kind::CodeD,
            Object::Triangulation(_) => Kind::Triangulation,
            Object::Tiling(_) => Kind::Tiling,
            Object::Diagram(_) => Kind::Diagram,
        }
    }

    pub fn colored(m: ColoredMatching) -> Self {
        let k = m.k();
        Object::Matching(m.into_matching(), Some(k))
    }

    fn to_wire(&self) -> Wire {
        match self {
            Object::Matching(m, k) => Wire::Matching {
                n: m.n(),
                k: *k,
                edges: m.edges().to_vec(),
            },
            Object::CodeB(c) => Wire::CodeB {
                code: c.to_string(),
            },
            Object::CodeD(c) => Wire::CodeD {
                code: c.to_string(),
            },
            Object::Triangulation(t) => Wire::Triangulation {
                npoints: t.npoints(),
                diagonals: t.diagonals().to_vec(),
            },
            Object::Tiling(t) => Wire::Tiling {
                t: t.t(),
                npoints: t.npoints(),
                diagonals: t.diagonals().to_vec(),
            },
            Object::Diagram(d) => Wire::Diagram {
                rows: d.rows(),
                n: d.rows(),
                k: d.k(),
                edges: d.pairing().edges().to_vec(),
            },
        }
    }

    fn from_wire(wire: Wire) -> Result<Self, EnvelopeError> {
        Ok(match wire {
            Wire::Matching { n, k, edges } => {
                let m = Matching::new(n, edges)?;
                match k {
                    Some(k) => Object::colored(ColoredMatching::new(m, k)?),
                    None => Object::Matching(m, None),
                }
            }
            Wire::CodeB { code } => Object::CodeB(code.parse()?),
            Wire::CodeD { code } => Object::CodeD(code.parse()?),
            Wire::Triangulation { npoints, diagonals } => {
                Object::Triangulation(Triangulation::new(npoints, &diagonals)?)
            }
            Wire::Tiling {
                t,
                npoints,
                diagonals,
            } => Object::Tiling(Tiling::new(t, npoints, &diagonals)?),
            Wire::Diagram { rows, n, k, edges } => {
                if rows != n {
                    return Err(EnvelopeError::Syntax(format!(
                        "diagram rows {rows} differs from n {n}"
                    )));
                }
                Object::Diagram(Diagram::new(Matching::new(n, edges)?, k)?)
            }
        })
    }

    /// Single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("plain data")
    }

    pub fn from_json(s: &str) -> Result<Self, EnvelopeError> {
        let wire: Wire =
            serde_json::from_str(s).map_err(|e| EnvelopeError::Syntax(e.to_string()))?;
        Self::from_wire(wire)
    }

    /// Plain text for codes, JSON otherwise. `k` adds block separators to a
    /// `B` code.
    pub fn to_text(&self, k: Option<usize>) -> String {
        match (self, k) {
            (Object::CodeB(c), Some(k)) if k > 0 && c.n() % k == 0 => c.display_blocks(k),
            (Object::CodeB(c), _) => c.to_string(),
            (Object::CodeD(c), _) => c.to_string(),
            _ => self.to_json(),
        }
    }

    /// Reads JSON (leading `{`), a `D` code (contains `,`), or a `B` code.
    /// `hint` forces a kind for bare codes.
    pub fn parse(s: &str, hint: Option<Kind>) -> Result<Self, EnvelopeError> {
        let s = s.trim();
        if s.starts_with('{') {
            let obj = Self::from_json(s)?;
            if let Some(kind) = hint {
                if kind != obj.kind() {
                    return Err(EnvelopeError::Syntax(format!(
                        "expected {kind}, found {}",
                        obj.kind()
                    )));
                }
            }
            return Ok(obj);
        }
        let kind = hint.unwrap_or(
            if s.contains(',') || s.chars().any(|c| c > '1' && c.is_ascii_digit()) {
                Kind::CodeD
            } else {
                Kind::CodeB
            },
        );
        match kind {
            Kind::CodeB => Ok(Object::CodeB(s.parse()?)),
            Kind::CodeD => Ok(Object::CodeD(s.parse()?)),
            other => Err(EnvelopeError::Syntax(format!(
                "{other} input must be a JSON object"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tl_generator;

    #[test]
    fn json_forms() {
        let m = Matching::new(2, vec![(1, 4), (2, 3)]).unwrap();
        assert_eq!(
            Object::Matching(m.clone(), None).to_json(),
            r#"{"kind":"matching","n":2,"edges":[[1,4],[2,3]]}"#
        );
        let t = Tiling::new(4, 6, &[(2, 5)]).unwrap();
        assert_eq!(
            Object::Tiling(t).to_json(),
            r#"{"kind":"tiling","t":4,"npoints":6,"diagonals":[[2,5]]}"#
        );
        let tr = Triangulation::new(5, &[(1, 3), (1, 4)]).unwrap();
        assert_eq!(
            Object::Triangulation(tr).to_json(),
            r#"{"kind":"triangulation","npoints":5,"diagonals":[[1,3],[1,4]]}"#
        );
        let d = tl_generator(2, 1).unwrap();
        assert_eq!(
            Object::Diagram(d).to_json(),
            r#"{"kind":"diagram","rows":2,"n":2,"edges":[[1,2],[3,4]]}"#
        );
    }

    #[test]
    fn round_trips() {
        let samples = [
            r#"{"kind":"matching","n":4,"k":2,"edges":[[1,8],[2,3],[4,5],[6,7]]}"#,
            r#"{"kind":"tiling","t":4,"npoints":6,"diagonals":[[2,5]]}"#,
            r#"{"kind":"diagram","rows":2,"n":2,"edges":[[1,2],[3,4]]}"#,
            r#"{"kind":"code-b","code":"1100"}"#,
        ];
        for s in samples {
            assert_eq!(Object::from_json(s).unwrap().to_json(), s);
        }
    }

    #[test]
    fn text_detection() {
        assert_eq!(
            Object::parse("11|01|01|00", None).unwrap().kind(),
            Kind::CodeB
        );
        assert_eq!(Object::parse("3,0,0\n", None).unwrap().kind(), Kind::CodeD);
        assert_eq!(
            Object::parse("1", Some(Kind::CodeD)).unwrap().kind(),
            Kind::CodeD
        );
        let b = Object::parse("11010100", None).unwrap();
        assert_eq!(b.to_text(Some(2)), "11|01|01|00");
        assert_eq!(b.to_text(None), "11010100");
    }

    #[test]
    fn syntax_and_validation_errors_differ() {
        assert!(Object::parse("{not json", None).unwrap_err().is_syntax());
        assert!(Object::parse("1x0", None).unwrap_err().is_syntax());
        assert!(Object::parse(r#"{"kind":"bogus"}"#, None)
            .unwrap_err()
            .is_syntax());
        let invalid =
            Object::parse(r#"{"kind":"matching","n":2,"edges":[[1,3],[2,4]]}"#, None).unwrap_err();
        assert!(!invalid.is_syntax());
        assert!(!Object::parse("1001", None).unwrap_err().is_syntax());
        let bichromatic = Object::parse(
            r#"{"kind":"matching","n":2,"k":2,"edges":[[1,2],[3,4]]}"#,
            None,
        )
        .unwrap_err();
        assert!(matches!(
            bichromatic,
            EnvelopeError::Matching(MatchingError::Bichromatic { .. })
        ));
    }

    #[test]
    fn kinds_parse() {
        for kind in Kind::ALL {
            assert_eq!(kind.name().parse::<Kind>().unwrap(), kind);
        }
        assert!("graph".parse::<Kind>().is_err());
    }
}
