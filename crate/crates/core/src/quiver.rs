//! Finite quivers (directed multigraphs with named vertices and arrows)
//! and composable paths inside them.
//!
//! Vertices and arrows are addressed by dense indices ([`VertexId`],
//! [`ArrowId`]) in declaration order; every operation in the crate keeps
//! that order stable, so printed output is reproducible byte for byte.

use thiserror::Error;

/// Index of a vertex within its [`Quiver`], in declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

/// Index of an arrow within its [`Quiver`], in declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArrowId(pub usize);

/// A named arrow between two vertices. Loops (`source == target`) are
/// allowed, as are parallel arrows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to unknown vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
}

/// A finite quiver. Names are unique within their kind (vertex names may
/// coincide with arrow names).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(name, source, target)`
    /// arrow triples, resolving vertex references by name.
    pub fn new<S: AsRef<str>>(
        vertices: &[S],
        arrows: &[(S, S, S)],
    ) -> Result<Self, QuiverError> {
        let mut names: Vec<String> = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if names.iter().any(|n| n == v) {
                return Err(QuiverError::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }
        let mut built: Vec<Arrow> = Vec::with_capacity(arrows.len());
        for (name, src, tgt) in arrows {
            let (name, src, tgt) = (name.as_ref(), src.as_ref(), tgt.as_ref());
            if built.iter().any(|a| a.name == name) {
                return Err(QuiverError::DuplicateArrow(name.to_string()));
            }
            let resolve = |v: &str| {
                names
                    .iter()
                    .position(|n| n == v)
                    .map(VertexId)
                    .ok_or_else(|| QuiverError::UnknownVertex {
                        arrow: name.to_string(),
                        vertex: v.to_string(),
                    })
            };
            built.push(Arrow {
                name: name.to_string(),
                source: resolve(src)?,
                target: resolve(tgt)?,
            });
        }
        Ok(Quiver { vertices: names, arrows: built })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_name(&self, a: ArrowId) -> &str {
        &self.arrows[a.0].name
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a.0].target
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|n| n == name).map(VertexId)
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(ArrowId)
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn arrows_from(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrow_ids().filter(|&a| self.source(a) == v).collect()
    }

    /// Arrows ending at `v`, in declaration order.
    pub fn arrows_into(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrow_ids().filter(|&a| self.target(a) == v).collect()
    }

    /// `t(a) == s(b)`, i.e. the two-arrow path `a·b` exists.
    pub fn composable(&self, a: ArrowId, b: ArrowId) -> bool {
        self.target(a) == self.source(b)
    }

    /// Whether the underlying undirected graph is connected. The empty
    /// quiver and single vertices count as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.len() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.source.0, a.target.0), (a.target.0, a.source.0)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("arrows {0} and {1} are not composable at position {2}")]
    NotComposable(String, String, usize),
    #[error("arrow index {0} out of range")]
    UnknownArrow(usize),
}

/// A composable path: a start vertex followed by zero or more arrows,
/// each beginning where the previous one ends. A path with no arrows is
/// the trivial path `e_v` at its start vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Path {
    start: VertexId,
    end: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { start: v, end: v, arrows: Vec::new() }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self, PathError> {
        for &a in &arrows {
            if a.0 >= q.arrow_count() {
                return Err(PathError::UnknownArrow(a.0));
            }
        }
        let first = *arrows.first().expect("use Path::trivial for empty paths");
        for (i, pair) in arrows.windows(2).enumerate() {
            if !q.composable(pair[0], pair[1]) {
                return Err(PathError::NotComposable(
                    q.arrow_name(pair[0]).to_string(),
                    q.arrow_name(pair[1]).to_string(),
                    i,
                ));
            }
        }
        let last = *arrows.last().unwrap();
        Ok(Path { start: q.source(first), end: q.target(last), arrows })
    }

    /// The path length; a length of 0 means a trivial path (see
    /// [`Path::is_trivial`]).
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> VertexId {
        self.start
    }

    pub fn target(&self) -> VertexId {
        self.end
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn first_arrow(&self) -> Option<ArrowId> {
        self.arrows.first().copied()
    }

    pub fn last_arrow(&self) -> Option<ArrowId> {
        self.arrows.last().copied()
    }

    /// The nonempty subpath made of `len` arrows starting at position
    /// `from`.
    pub fn subpath(&self, q: &Quiver, from: usize, len: usize) -> Path {
        assert!(len >= 1 && from + len <= self.arrows.len());
        let arrows = self.arrows[from..from + len].to_vec();
        Path {
            start: q.source(arrows[0]),
            end: q.target(arrows[len - 1]),
            arrows,
        }
    }

    /// Concatenation `self · other`, if the endpoints meet.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.end != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { start: self.start, end: other.end, arrows })
    }

    /// The `len + 1` vertices visited, in order (repeats included).
    pub fn vertex_sequence(&self, q: &Quiver) -> Vec<VertexId> {
        let mut seq = Vec::with_capacity(self.arrows.len() + 1);
        seq.push(self.start);
        for &a in &self.arrows {
            seq.push(q.target(a));
        }
        seq
    }

    /// `e_v` for trivial paths, otherwise arrow names joined by `*`.
    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertex_name(self.start))
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrow_name(a))
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}
