use std::collections::HashMap;

use super::{BoundArrow, BoundQuiver, Path, Quiver, Resolution, Square};

/// How an arrow of the path quiver extends a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extension {
    /// Prepend a base arrow ending at the path's source.
    Source(usize),
    /// Append a base arrow starting at the path's target.
    Target(usize),
}

/// The quiver whose vertices are the paths of a base quiver, with one arrow
/// per one-step extension at either end, bound by the squares saying the two
/// ends can be extended in either order.
///
/// Path vertices are numbered in `Quiver::enumerate_paths` order, which is a
/// topological order since every arrow increases the length.
#[derive(Debug, Clone)]
pub struct PathQuiver {
    base: Quiver,
    paths: Vec<Path>,
    extensions: Vec<Extension>,
    bound: BoundQuiver,
    parallel: bool,
}

impl PathQuiver {
    pub fn build(base: &Quiver) -> Self {
        let paths = base.enumerate_paths();
        let index: HashMap<(usize, &[usize]), usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.source, p.arrows.as_slice()), i))
            .collect();
        let lookup = |source: usize, arrows: &[usize]| index[&(source, arrows)];

        let mut arrows = Vec::new();
        let mut extensions = Vec::new();
        let mut arrow_at: HashMap<(usize, Extension), usize> = HashMap::new();
        for (v, p) in paths.iter().enumerate() {
            for (ai, a) in base.arrows().iter().enumerate() {
                if a.target == p.source {
                    let mut seq = vec![ai];
                    seq.extend_from_slice(&p.arrows);
                    let w = lookup(a.source, &seq);
                    arrow_at.insert((v, Extension::Source(ai)), arrows.len());
                    arrows.push(BoundArrow { source: v, target: w });
                    extensions.push(Extension::Source(ai));
                }
            }
            for (bi, b) in base.arrows().iter().enumerate() {
                if b.source == p.target {
                    let mut seq = p.arrows.clone();
                    seq.push(bi);
                    let w = lookup(p.source, &seq);
                    arrow_at.insert((v, Extension::Target(bi)), arrows.len());
                    arrows.push(BoundArrow { source: v, target: w });
                    extensions.push(Extension::Target(bi));
                }
            }
        }

        let mut squares = Vec::new();
        for (v, p) in paths.iter().enumerate() {
            for (ai, a) in base.arrows().iter().enumerate() {
                if a.target != p.source {
                    continue;
                }
                for (bi, b) in base.arrows().iter().enumerate() {
                    if b.source != p.target {
                        continue;
                    }
                    let a1 = arrow_at[&(v, Extension::Source(ai))];
                    let a2 = arrow_at[&(arrows[a1].target, Extension::Target(bi))];
                    let b1 = arrow_at[&(v, Extension::Target(bi))];
                    let b2 = arrow_at[&(arrows[b1].target, Extension::Source(ai))];
                    squares.push(Square {
                        a: [a1, a2],
                        b: [b1, b2],
                    });
                }
            }
        }

        let parallel = base.has_parallel_paths();
        let names = paths.iter().map(|p| base.path_name(p)).collect();
        let resolution = if parallel {
            Resolution::Unknown
        } else {
            Resolution::Length2
        };
        let bound = BoundQuiver::new(names, arrows, squares, resolution)
            .expect("path quiver of an acyclic quiver is acyclic");
        PathQuiver {
            base: base.clone(),
            paths,
            extensions,
            bound,
            parallel,
        }
    }

    pub fn base(&self) -> &Quiver {
        &self.base
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, v: usize) -> &Path {
        &self.paths[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.paths.len()
    }

    pub fn bound(&self) -> &BoundQuiver {
        &self.bound
    }

    pub fn extension(&self, arrow: usize) -> Extension {
        self.extensions[arrow]
    }

    pub fn has_parallel_paths(&self) -> bool {
        self.parallel
    }

    pub fn name(&self, v: usize) -> &str {
        self.bound.name(v)
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.bound.names().iter().position(|n| n == name)
    }

    /// `(target, source)` of the path at `v`: the pair index used when the
    /// base quiver has no parallel paths.
    pub fn pair(&self, v: usize) -> (usize, usize) {
        (self.paths[v].target, self.paths[v].source)
    }

    /// Base vertices visited by the path at `v`, source to target.
    pub fn path_vertices(&self, v: usize) -> Vec<usize> {
        self.base.path_vertices(&self.paths[v])
    }

    pub fn lazy_vertex(&self, base_vertex: usize) -> usize {
        // lazy paths come first, in vertex order
        base_vertex
    }
}
