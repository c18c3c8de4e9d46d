//! Acyclic quivers bound by commutativity squares.
//!
//! This is the shape shared by the path quiver of a base quiver and by any
//! auxiliary quiver a Grassmannian is re-expressed on. Upper ideals and the
//! homological Euler form live here.

use thiserror::Error;

use super::{topological_order, QuiverError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoundArrow {
    pub source: usize,
    pub target: usize,
}

/// A commutativity relation `a[1]∘a[0] = b[1]∘b[0]`, given by arrow indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Square {
    pub a: [usize; 2],
    pub b: [usize; 2],
}

/// Whether the vertex/arrow/square complex is a projective resolution of the
/// simples, i.e. whether Ext groups up to degree two can be read off it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    /// Global dimension at most two with the squares as minimal relations.
    Length2,
    /// No resolution is known; Ext computations are refused.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("support is not closed under arrows: {from} -> {to} leaves it")]
    SupportNotArrowClosed { from: usize, to: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundQuiver {
    names: Vec<String>,
    arrows: Vec<BoundArrow>,
    squares: Vec<Square>,
    resolution: Resolution,
    topological: Vec<usize>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
    reach: Vec<VertexSet>,
}

impl BoundQuiver {
    pub fn new(
        names: Vec<String>,
        arrows: Vec<BoundArrow>,
        squares: Vec<Square>,
        resolution: Resolution,
    ) -> Result<Self, QuiverError> {
        let n = names.len();
        for a in &arrows {
            if a.source >= n || a.target >= n {
                return Err(QuiverError::UnknownVertex(format!("{}", a.source.max(a.target))));
            }
        }
        let topological = topological_order(n, arrows.iter().map(|a| (a.source, a.target)))
            .map_err(|v| QuiverError::CycleDetected(names[v].clone()))?;
        for (i, sq) in squares.iter().enumerate() {
            let ok = sq.a.iter().chain(&sq.b).all(|&x| x < arrows.len()) && {
                let (a0, a1) = (arrows[sq.a[0]], arrows[sq.a[1]]);
                let (b0, b1) = (arrows[sq.b[0]], arrows[sq.b[1]]);
                a0.target == a1.source
                    && b0.target == b1.source
                    && a0.source == b0.source
                    && a1.target == b1.target
            };
            if !ok {
                return Err(QuiverError::InvalidSquare(i));
            }
        }
        let mut outgoing = vec![Vec::new(); n];
        let mut incoming = vec![Vec::new(); n];
        for (i, a) in arrows.iter().enumerate() {
            outgoing[a.source].push(i);
            incoming[a.target].push(i);
        }
        let mut reach = vec![VertexSet::new(); n];
        for &v in topological.iter().rev() {
            let mut r = VertexSet::from_indices([v]);
            for &a in &outgoing[v] {
                r.union_with(&reach[arrows[a].target]);
            }
            reach[v] = r;
        }
        Ok(BoundQuiver {
            names,
            arrows,
            squares,
            resolution,
            topological,
            outgoing,
            incoming,
            reach,
        })
    }

    /// A quiver with no relations; its path algebra is hereditary.
    pub fn free(names: Vec<String>, arrows: Vec<BoundArrow>) -> Result<Self, QuiverError> {
        Self::new(names, arrows, Vec::new(), Resolution::Length2)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn arrows(&self) -> &[BoundArrow] {
        &self.arrows
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn resolution(&self) -> Resolution {
        self.resolution
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topological
    }

    pub fn outgoing(&self, v: usize) -> &[usize] {
        &self.outgoing[v]
    }

    pub fn incoming(&self, v: usize) -> &[usize] {
        &self.incoming[v]
    }

    /// Vertices reachable from `v`, `v` included.
    pub fn up_set(&self, v: usize) -> &VertexSet {
        &self.reach[v]
    }

    /// The reachability partial order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.reach[a].contains(b)
    }

    /// Is `order` a topological order of all vertices?
    pub fn is_topological(&self, order: &[usize]) -> bool {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            if v >= pos.len() || pos[v] != usize::MAX {
                return false;
            }
            pos[v] = i;
        }
        order.len() == self.vertex_count() && self.arrows.iter().all(|a| pos[a.source] < pos[a.target])
    }

    pub fn check_arrow_closed(&self, support: &VertexSet) -> Result<(), IdealError> {
        for v in support.iter() {
            for &a in &self.outgoing[v] {
                let w = self.arrows[a].target;
                if !support.contains(w) {
                    return Err(IdealError::SupportNotArrowClosed { from: v, to: w });
                }
            }
        }
        Ok(())
    }

    /// Is `c ⊆ support` closed under arrows that stay inside `support`?
    pub fn is_upper_ideal(&self, support: &VertexSet, c: &VertexSet) -> bool {
        c.is_subset(support)
            && c.iter().all(|v| {
                self.outgoing[v].iter().all(|&a| {
                    let w = self.arrows[a].target;
                    !support.contains(w) || c.contains(w)
                })
            })
    }

    /// All upper ideals of an arrow-closed vertex set, empty and full included.
    pub fn upper_ideals(&self, support: &VertexSet) -> Result<UpperIdeals<'_>, IdealError> {
        self.check_arrow_closed(support)?;
        let mut order: Vec<usize> = self
            .topological
            .iter()
            .copied()
            .filter(|&v| support.contains(v))
            .collect();
        order.reverse();
        Ok(UpperIdeals {
            quiver: self,
            support: support.clone(),
            included: vec![false; order.len()],
            order,
            current: VertexSet::new(),
            state: IterState::Fresh,
        })
    }

    /// Splits an ideal into its connected components under the undirected
    /// arrow adjacency, ordered by smallest member.
    pub fn decompose_ideal(&self, c: &VertexSet) -> Vec<VertexSet> {
        let members: Vec<usize> = c.iter().collect();
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in &self.arrows {
            if c.contains(a.source) && c.contains(a.target) {
                let (ra, rb) = (find(&mut parent, a.source), find(&mut parent, a.target));
                if ra != rb {
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut parts: Vec<(usize, VertexSet)> = Vec::new();
        for v in members {
            let root = find(&mut parent, v);
            match parts.iter_mut().find(|(r, _)| *r == root) {
                Some((_, set)) => set.insert(v),
                None => parts.push((root, VertexSet::from_indices([v]))),
            }
        }
        parts.sort_by_key(|(_, s)| s.min());
        parts.into_iter().map(|(_, s)| s).collect()
    }

    /// `Σ x_v y_v − Σ_{u→v} x_u y_v + Σ_{squares u⇒w} x_u y_w`.
    pub fn euler_form(&self, x: &[usize], y: &[usize]) -> i64 {
        let p = |a: usize, b: usize| (x[a] * y[b]) as i64;
        let vertices: i64 = (0..self.vertex_count()).map(|v| p(v, v)).sum();
        let arrows: i64 = self.arrows.iter().map(|a| p(a.source, a.target)).sum();
        let squares: i64 = self
            .squares
            .iter()
            .map(|s| p(self.arrows[s.a[0]].source, self.arrows[s.a[1]].target))
            .sum();
        vertices - arrows + squares
    }
}

enum IterState {
    Fresh,
    Running,
    Done,
}

/// Lazy enumeration of upper ideals in increasing bit-set order (for vertex
/// numberings that are topological).
pub struct UpperIdeals<'a> {
    quiver: &'a BoundQuiver,
    support: VertexSet,
    // successors before predecessors
    order: Vec<usize>,
    included: Vec<bool>,
    current: VertexSet,
    state: IterState,
}

impl UpperIdeals<'_> {
    fn can_include(&self, v: usize) -> bool {
        self.quiver.outgoing[v].iter().all(|&a| {
            let w = self.quiver.arrows[a].target;
            !self.support.contains(w) || self.current.contains(w)
        })
    }
}

impl Iterator for UpperIdeals<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                return Some(VertexSet::new());
            }
            IterState::Running => {}
        }
        for i in (0..self.order.len()).rev() {
            let v = self.order[i];
            if self.included[i] {
                self.included[i] = false;
                self.current.remove(v);
                continue;
            }
            if self.can_include(v) {
                self.included[i] = true;
                self.current.insert(v);
                return Some(self.current.clone());
            }
        }
        self.state = IterState::Done;
        None
    }
}
