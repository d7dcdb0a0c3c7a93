use std::collections::BTreeMap;

use super::CoreError;

/// Per-frame categorical annotation of match state, e.g. ball possession.
#[derive(Debug, Clone, PartialEq)]
pub struct GameCode {
    name: String,
    values: Vec<String>,
    definitions: BTreeMap<String, String>,
    framerate: f64,
}

/// One maximal run of identical tokens: frames `start..end` (end exclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeInterval {
    pub start: usize,
    pub end: usize,
    pub token: String,
}

impl GameCode {
    /// Every token occurring in `values` must have a definition.
    pub fn new(
        name: impl Into<String>,
        values: Vec<String>,
        definitions: BTreeMap<String, String>,
        framerate: f64,
    ) -> Result<Self, CoreError> {
        if !(framerate.is_finite() && framerate > 0.0) {
            return Err(CoreError::InvalidFramerate(framerate));
        }
        for (frame, token) in values.iter().enumerate() {
            if !definitions.contains_key(token) {
                return Err(CoreError::UndefinedToken {
                    token: token.clone(),
                    frame,
                });
            }
        }
        Ok(GameCode {
            name: name.into(),
            values,
            definitions,
            framerate,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }

    pub fn definitions(&self) -> &BTreeMap<String, String> {
        &self.definitions
    }

    pub fn framerate(&self) -> f64 {
        self.framerate
    }

    pub fn n_frames(&self) -> usize {
        self.values.len()
    }

    /// Run-length view of the code: intervals partition `0..F`, consecutive
    /// intervals carry different tokens, and concatenating them reproduces
    /// `values` exactly.
    pub fn intervals(&self) -> Vec<CodeInterval> {
        let mut out = Vec::new();
        let mut start = 0usize;
        for t in 1..=self.values.len() {
            if t == self.values.len() || self.values[t] != self.values[start] {
                out.push(CodeInterval {
                    start,
                    end: t,
                    token: self.values[start].clone(),
                });
                start = t;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(tokens: &[&str]) -> GameCode {
        let defs = tokens
            .iter()
            .map(|t| (t.to_string(), t.to_string()))
            .collect();
        GameCode::new(
            "possession",
            tokens.iter().map(|t| t.to_string()).collect(),
            defs,
            25.0,
        )
        .unwrap()
    }

    fn decode(intervals: &[CodeInterval]) -> Vec<String> {
        let mut out = Vec::new();
        for iv in intervals {
            for _ in iv.start..iv.end {
                out.push(iv.token.clone());
            }
        }
        out
    }

    #[test]
    fn run_length_encoding_by_hand() {
        let c = code(&["A", "A", "B", "B", "B", "A"]);
        let ivs = c.intervals();
        assert_eq!(ivs.len(), 3);
        assert_eq!((ivs[0].start, ivs[0].end, ivs[0].token.as_str()), (0, 2, "A"));
        assert_eq!((ivs[1].start, ivs[1].end, ivs[1].token.as_str()), (2, 5, "B"));
        assert_eq!((ivs[2].start, ivs[2].end, ivs[2].token.as_str()), (5, 6, "A"));
    }

    #[test]
    fn empty_and_singleton() {
        assert!(code(&[]).intervals().is_empty());
        let ivs = code(&["A"]).intervals();
        assert_eq!(ivs.len(), 1);
        assert_eq!((ivs[0].start, ivs[0].end), (0, 1));
    }

    #[test]
    fn intervals_decode_back_to_values() {
        let c = code(&["H", "H", "A", "H", "A", "A", "A"]);
        assert_eq!(decode(&c.intervals()), c.values());
    }

    #[test]
    fn rejects_undefined_token() {
        let err = GameCode::new(
            "possession",
            vec!["A".into()],
            BTreeMap::new(),
            25.0,
        );
        assert!(matches!(err, Err(CoreError::UndefinedToken { .. })));
    }
}
