use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Loops and oriented cycles are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(name, source, target)` with endpoints given by vertex name.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Quiver> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::MalformedQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut out = Quiver { vertices, arrows: Vec::new() };
        for (name, s, t) in arrows {
            let name = name.as_ref().to_string();
            if out.arrows.iter().any(|a| a.name == name) || out.vertices.contains(&name) {
                return Err(Error::MalformedQuiver(format!("duplicate name {name}")));
            }
            let source = out.vertex_index(s.as_ref())?;
            let target = out.vertex_index(t.as_ref())?;
            out.arrows.push(Arrow { name, source, target });
        }
        Ok(out)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub(crate) fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.num_vertices();
        let mut indeg = alloc::vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|v| indeg[*v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Source and target of a path given as arrow indices in traversal order.
    pub(crate) fn path_endpoints(&self, path: &[usize]) -> Result<(usize, usize)> {
        let first = path.first().ok_or_else(|| Error::MalformedRelation("empty path".to_string()))?;
        let mut at = self.arrows[*first].target;
        for &a in &path[1..] {
            if self.arrows[a].source != at {
                return Err(Error::MalformedRelation(format!(
                    "arrow {} does not start where the path arrives",
                    self.arrows[a].name
                )));
            }
            at = self.arrows[a].target;
        }
        Ok((self.arrows[*first].source, at))
    }
}

/// A linear combination of parallel paths. Paths are arrow indices in traversal order: the path
/// that first runs `a` and then `b` is `[a, b]` (the product `b·a`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Vec<usize>)>) -> Relation {
        Relation { terms }
    }

    /// Builds a relation from arrow names.
    pub fn from_names(quiver: &Quiver, terms: &[(Scalar, &[&str])]) -> Result<Relation> {
        let terms = terms
            .iter()
            .map(|(c, path)| {
                let ids = path.iter().map(|n| quiver.arrow_index(n)).collect::<Result<Vec<_>>>()?;
                Ok((c.clone(), ids))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Relation { terms })
    }

    /// Checks admissibility shape: every path has length at least 2 and all paths are parallel.
    /// Returns the common `(source, target)` (or `None` for an empty relation).
    pub fn validate(&self, quiver: &Quiver) -> Result<Option<(usize, usize)>> {
        let mut ends = None;
        for (_, path) in &self.terms {
            if path.iter().any(|a| *a >= quiver.arrows().len()) {
                return Err(Error::MalformedRelation("arrow index out of range".to_string()));
            }
            if path.len() < 2 {
                return Err(Error::MalformedRelation("relation paths must have length at least 2".to_string()));
            }
            let e = quiver.path_endpoints(path)?;
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::MalformedRelation("relation paths are not parallel".to_string()))
                }
                _ => {}
            }
        }
        Ok(ends)
    }

    pub(crate) fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                .collect(),
        }
    }
}

/// Which side the ring acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}
