//! Acyclic quivers and their quivers of paths.

mod bound;
mod parse;
mod path_quiver;

pub use bound::{BoundArrow, BoundQuiver, IdealError, Resolution, Square, UpperIdeals};
pub use parse::{parse_quiver_file, validate_quiver, QuiverFile};
pub use path_quiver::{Extension, PathQuiver};

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate identifier `{0}`")]
    DuplicateIdentifier(String),
    #[error("arrow `{arrow}` references unknown vertex `{vertex}`")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("directed cycle through vertex `{0}`")]
    CycleDetected(String),
    #[error("no dimension given for vertex `{0}`")]
    MissingDimension(String),
    #[error("relation square {0} does not close up")]
    InvalidSquare(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver without oriented cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    topological: Vec<usize>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(arrow id, source id, target id)` triples.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateIdentifier(v.clone()));
            }
        }
        let mut seen = HashMap::new();
        let mut raw = Vec::new();
        for (id, s, t) in arrows {
            if seen.insert(id.clone(), ()).is_some() {
                return Err(QuiverError::DuplicateIdentifier(id));
            }
            raw.push((id, s, t));
        }
        let mut out = Vec::with_capacity(raw.len());
        for (id, s, t) in raw {
            let lookup = |v: &String| {
                index
                    .get(v)
                    .copied()
                    .ok_or_else(|| QuiverError::DanglingEndpoint {
                        arrow: id.clone(),
                        vertex: v.clone(),
                    })
            };
            let source = lookup(&s)?;
            let target = lookup(&t)?;
            out.push(Arrow { id, source, target });
        }
        let topological = topological_order(vertices.len(), out.iter().map(|a| (a.source, a.target)))
            .map_err(|v| QuiverError::CycleDetected(vertices[v].clone()))?;
        Ok(Quiver {
            vertices,
            arrows: out,
            topological,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == id)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topological
    }

    /// Number of paths from `i` to `j` for all pairs, by dynamic programming
    /// over a topological order.
    pub fn path_counts(&self) -> Vec<Vec<u64>> {
        let n = self.vertex_count();
        let mut counts = vec![vec![0u64; n]; n];
        for &v in self.topological.iter().rev() {
            counts[v][v] = 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                let below = counts[a.target].clone();
                counts[v].iter_mut().zip(below).for_each(|(c, b)| *c += b);
            }
        }
        counts
    }

    /// True iff some ordered pair of vertices is joined by at least two distinct paths.
    pub fn has_parallel_paths(&self) -> bool {
        self.path_counts().iter().flatten().any(|&c| c > 1)
    }

    /// All paths, lazy ones included, ordered by length and then
    /// lexicographically by the sequence of arrow indices.
    pub fn enumerate_paths(&self) -> Vec<Path> {
        let mut all: Vec<Path> = (0..self.vertex_count()).map(Path::lazy).collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for p in &layer {
                for (ai, a) in self.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path {
                            source: p.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all
    }

    /// Vertices visited by a path, from source to target.
    pub fn path_vertices(&self, path: &Path) -> Vec<usize> {
        let mut out = vec![path.source];
        out.extend(path.arrows.iter().map(|&a| self.arrows[a].target));
        out
    }

    pub fn path_name(&self, path: &Path) -> String {
        if path.arrows.is_empty() {
            format!("e({})", self.vertices[path.source])
        } else {
            path.arrows
                .iter()
                .map(|&a| self.arrows[a].id.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// A path of the base quiver. Arrows are listed in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn lazy(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Kahn's algorithm, smallest available vertex first. On failure returns a
/// vertex lying on a cycle.
pub(crate) fn topological_order(
    n: usize,
    edges: impl Iterator<Item = (usize, usize)>,
) -> Result<Vec<usize>, usize> {
    let mut indegree = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (s, t) in edges {
        out[s].push(t);
        indegree[t] += 1;
    }
    let mut ready: std::collections::BTreeSet<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        order.push(v);
        for &w in &out[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.insert(w);
            }
        }
    }
    if order.len() == n {
        Ok(order)
    } else {
        Err((0..n).find(|&v| indegree[v] > 0).unwrap_or(0))
    }
}
