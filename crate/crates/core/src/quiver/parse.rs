//! Line-oriented quiver text format.
//!
//! ```text
//! # comment
//! vertex <id>
//! arrow <id> <source> <target>
//! dim <vertex> <n>
//! ```
//!
//! Statements are separated by newlines or `;`. Ids are nonempty
//! alphanumeric tokens.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Quiver, QuiverError};

/// A parsed quiver file: the quiver plus the optional `dim` assignments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverFile {
    pub quiver: Quiver,
    pub dims: Vec<Option<usize>>,
}

impl QuiverFile {
    /// Dimension of every vertex, failing on the first vertex without a `dim` line.
    pub fn dims(&self) -> Result<Vec<usize>, QuiverError> {
        self.dims
            .iter()
            .enumerate()
            .map(|(v, d)| {
                d.ok_or_else(|| QuiverError::MissingDimension(self.quiver.vertex_name(v).to_string()))
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in self.quiver.vertices() {
            writeln!(out, "vertex {v}").unwrap();
        }
        for a in self.quiver.arrows() {
            writeln!(
                out,
                "arrow {} {} {}",
                a.id,
                self.quiver.vertex_name(a.source),
                self.quiver.vertex_name(a.target)
            )
            .unwrap();
        }
        for (v, d) in self.dims.iter().enumerate() {
            if let Some(d) = d {
                writeln!(out, "dim {} {d}", self.quiver.vertex_name(v)).unwrap();
            }
        }
        out
    }
}

fn is_id(token: &str) -> bool {
    !token.is_empty() && token.chars().all(|c| c.is_ascii_alphanumeric())
}

/// Parses the quiver text format, including `dim` lines.
pub fn parse_quiver_file(raw: &str) -> Result<QuiverFile, QuiverError> {
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut dims: Vec<(usize, String, usize)> = Vec::new();

    for (lineno, line) in raw.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for stmt in line.split(';') {
            let tokens: Vec<&str> = stmt.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            let err = |message: String| QuiverError::Parse {
                line: lineno + 1,
                message,
            };
            for t in &tokens[1..] {
                if !is_id(t) {
                    return Err(err(format!("`{t}` is not an alphanumeric token")));
                }
            }
            match (tokens[0], tokens.len()) {
                ("vertex", 2) => vertices.push(tokens[1].to_string()),
                ("arrow", 4) => arrows.push((
                    tokens[1].to_string(),
                    tokens[2].to_string(),
                    tokens[3].to_string(),
                )),
                ("dim", 3) => {
                    let n = tokens[2]
                        .parse::<usize>()
                        .map_err(|_| err(format!("`{}` is not a nonnegative integer", tokens[2])))?;
                    dims.push((lineno + 1, tokens[1].to_string(), n));
                }
                ("vertex" | "arrow" | "dim", n) => {
                    return Err(err(format!("wrong number of fields ({n}) for `{}`", tokens[0])))
                }
                (kw, _) => return Err(err(format!("unknown keyword `{kw}`"))),
            }
        }
    }

    let quiver = Quiver::new(vertices, arrows)?;
    let mut assigned = vec![None; quiver.vertex_count()];
    let mut seen = HashMap::new();
    for (_, v, n) in dims {
        let idx = quiver
            .vertex_index(&v)
            .ok_or_else(|| QuiverError::UnknownVertex(v.clone()))?;
        if seen.insert(idx, ()).is_some() {
            return Err(QuiverError::DuplicateIdentifier(format!("dim {v}")));
        }
        assigned[idx] = Some(n);
    }
    Ok(QuiverFile {
        quiver,
        dims: assigned,
    })
}

/// Parses and validates a quiver description, discarding any `dim` lines.
pub fn validate_quiver(raw: &str) -> Result<Quiver, QuiverError> {
    parse_quiver_file(raw).map(|f| f.quiver)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_quiver() {
        let q = validate_quiver("vertex 1; vertex 2; arrow a 1 2").unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrows().len(), 1);
    }

    #[test]
    fn loop_is_a_cycle() {
        assert!(matches!(
            validate_quiver("vertex 1; arrow a 1 1"),
            Err(QuiverError::CycleDetected(_))
        ));
        assert!(matches!(
            validate_quiver("vertex 1; vertex 2; arrow a 1 2; arrow b 2 1"),
            Err(QuiverError::CycleDetected(_))
        ));
    }

    #[test]
    fn duplicate_arrow_id() {
        assert_eq!(
            validate_quiver("vertex 1; vertex 2; arrow a 1 2; arrow a 2 1"),
            Err(QuiverError::DuplicateIdentifier("a".into()))
        );
        assert!(matches!(
            validate_quiver("vertex 1; vertex 1"),
            Err(QuiverError::DuplicateIdentifier(_))
        ));
    }

    #[test]
    fn dangling_and_parse_errors() {
        assert!(matches!(
            validate_quiver("vertex 1; arrow a 1 7"),
            Err(QuiverError::DanglingEndpoint { .. })
        ));
        assert!(matches!(
            validate_quiver("vertex 1\nedge a 1 1"),
            Err(QuiverError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            validate_quiver("vertex a-b"),
            Err(QuiverError::Parse { .. })
        ));
        assert!(matches!(
            parse_quiver_file("vertex 1\ndim 1 -3"),
            Err(QuiverError::Parse { .. })
        ));
        assert!(matches!(
            parse_quiver_file("vertex 1\ndim 2 3"),
            Err(QuiverError::UnknownVertex(_))
        ));
    }

    #[test]
    fn comments_dims_and_round_trip() {
        let text = "# A2\nvertex 1\nvertex 2 # sink\narrow a 1 2\ndim 1 1\ndim 2 3\n";
        let file = parse_quiver_file(text).unwrap();
        assert_eq!(file.dims().unwrap(), vec![1, 3]);
        let again = parse_quiver_file(&file.to_text()).unwrap();
        assert_eq!(again, file);
    }

    #[test]
    fn missing_dimension() {
        let file = parse_quiver_file("vertex 1; vertex 2; dim 1 4").unwrap();
        assert_eq!(file.dims(), Err(QuiverError::MissingDimension("2".into())));
    }
}
