//! Quivers: finite directed multigraphs with named arrows.
//!
//! Vertices are `0..num_vertices` internally; display is 1-based. Arrow
//! names are unique nonempty strings. An arrow `a: i -> j` is composed
//! right-to-left everywhere in this crate: `u * v` means apply `v`, then
//! `u`, and is defined when `source(u) == target(v)`.

use crate::error::{Error, Result};
use alloc::string::String;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    num_vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(num_vertices: usize, arrows: Vec<Arrow>) -> Result<Quiver> {
        for a in &arrows {
            if a.source >= num_vertices {
                return Err(Error::UnknownVertex { vertex: a.source, num_vertices });
            }
            if a.target >= num_vertices {
                return Err(Error::UnknownVertex { vertex: a.target, num_vertices });
            }
            assert!(!a.name.is_empty(), "arrow names must be nonempty");
        }
        for i in 0..arrows.len() {
            for j in i + 1..arrows.len() {
                assert_ne!(arrows[i].name, arrows[j].name, "duplicate arrow name");
            }
        }
        Ok(Quiver { num_vertices, arrows })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, idx: usize) -> &Arrow {
        &self.arrows[idx]
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].source == v).collect()
    }

    pub fn arrows_into(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].target == v).collect()
    }

    /// Same arrow names and indices, all directions reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            num_vertices: self.num_vertices,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn arrow(name: &str, s: usize, t: usize) -> Arrow {
        Arrow { name: name.to_string(), source: s, target: t }
    }

    #[test]
    fn construction_and_lookup() {
        let q = Quiver::new(2, alloc::vec![arrow("b", 0, 1), arrow("c", 0, 0)]).unwrap();
        assert_eq!(q.num_vertices(), 2);
        assert_eq!(q.arrow_index("b"), Some(0));
        assert_eq!(q.arrow_index("z"), None);
        assert_eq!(q.arrows_from(0), alloc::vec![0, 1]);
        assert_eq!(q.arrows_into(0), alloc::vec![1]);
    }

    #[test]
    fn rejects_bad_vertex() {
        assert!(Quiver::new(1, alloc::vec![arrow("a", 0, 1)]).is_err());
    }

    #[test]
    fn opposite_preserves_indices() {
        let q = Quiver::new(3, alloc::vec![arrow("a", 0, 1), arrow("b", 1, 2)]).unwrap();
        let op = q.opposite();
        assert_eq!(op.arrow(0).source, 1);
        assert_eq!(op.arrow(0).target, 0);
        assert_eq!(op.opposite(), q);
    }
}
