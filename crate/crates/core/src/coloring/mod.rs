//! Vertex colorings, the proper/equitable checker, and an exact backtracking
//! oracle for equitable k-colorability.

mod exact;
mod spectrum;

pub use exact::{chi_equitable, chi_equitable_with_budget, decide_equitable, exact_equitable, Decision};
pub use spectrum::{spectrum, spectrum_with_budget, Spectrum};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("number of colors must be positive")]
    NoColors,
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    LengthMismatch { coloring: usize, graph: usize },
    #[error("vertex {0} appears in more than one class")]
    DuplicateVertex(usize),
    #[error("vertex {0} is missing from the classes")]
    MissingVertex(usize),
    #[error("{classes} classes given for k = {k}")]
    TooManyClasses { classes: usize, k: usize },
}

/// Assignment of colors `1..=k` to the vertices `0..n`.
///
/// Classes may be empty; [`Coloring::has_empty_classes`] reports it. An
/// equitable coloring can only have empty classes when `k > n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ColoringJson", try_from = "ColoringJson")]
pub struct Coloring {
    k: usize,
    assignment: Vec<usize>,
    class_sizes: Vec<usize>,
}

/// Wire form: `{"k": .., "classes": [[v, ..], ..]}`, class `i` holds color `i + 1`.
#[derive(Serialize, Deserialize)]
struct ColoringJson {
    k: usize,
    classes: Vec<Vec<usize>>,
}

impl From<Coloring> for ColoringJson {
    fn from(c: Coloring) -> Self {
        ColoringJson { k: c.k, classes: c.classes() }
    }
}

impl TryFrom<ColoringJson> for Coloring {
    type Error = ColoringError;

    fn try_from(j: ColoringJson) -> Result<Self, Self::Error> {
        Coloring::from_classes(j.k, &j.classes)
    }
}

impl Coloring {
    pub fn new(k: usize, assignment: Vec<usize>) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::NoColors);
        }
        let mut class_sizes = vec![0; k];
        for (vertex, &color) in assignment.iter().enumerate() {
            if color == 0 || color > k {
                return Err(ColoringError::ColorOutOfRange { vertex, color, k });
            }
            class_sizes[color - 1] += 1;
        }
        Ok(Coloring { k, assignment, class_sizes })
    }

    /// Builds a coloring from classes that must partition `0..n`, where `n`
    /// is the total number of listed vertices.
    pub fn from_classes(k: usize, classes: &[Vec<usize>]) -> Result<Self, ColoringError> {
        if classes.len() > k {
            return Err(ColoringError::TooManyClasses { classes: classes.len(), k });
        }
        let n: usize = classes.iter().map(Vec::len).sum();
        let mut assignment = vec![0usize; n];
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if v >= n {
                    return Err(ColoringError::MissingVertex(n - 1));
                }
                if assignment[v] != 0 {
                    return Err(ColoringError::DuplicateVertex(v));
                }
                assignment[v] = i + 1;
            }
        }
        if let Some(v) = assignment.iter().position(|&c| c == 0) {
            return Err(ColoringError::MissingVertex(v));
        }
        Coloring::new(k, assignment)
    }

    /// Vertex `v` gets color `v + 1`, using `k >= n` colors.
    pub fn rainbow(n: usize, k: usize) -> Self {
        assert!(k >= n && k > 0, "rainbow coloring needs k >= n");
        Coloring::new(k, (1..=n).collect()).expect("colors within range")
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// `class_sizes()[c - 1]` is the number of vertices colored `c`.
    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    pub fn has_empty_classes(&self) -> bool {
        self.class_sizes.contains(&0)
    }

    /// Every class size lies in `{floor(n/k), ceil(n/k)}`.
    pub fn is_equitable(&self) -> bool {
        sizes_are_equitable(&self.class_sizes, self.n())
    }

    /// Every class has exactly the same size.
    pub fn is_strongly_equitable(&self) -> bool {
        self.class_sizes.windows(2).all(|w| w[0] == w[1])
    }

    /// Recolors with `perm[c - 1]` replacing color `c`. `perm` must be a
    /// permutation of `1..=k`.
    pub fn permute_colors(&self, perm: &[usize]) -> Coloring {
        assert_eq!(perm.len(), self.k, "permutation must cover every color");
        Coloring::new(self.k, self.assignment.iter().map(|&c| perm[c - 1]).collect())
            .expect("a permutation keeps colors in range")
    }
}

pub(crate) fn sizes_are_equitable(sizes: &[usize], n: usize) -> bool {
    let k = sizes.len();
    if k == 0 {
        return n == 0;
    }
    let lo = n / k;
    let hi = n.div_ceil(k);
    sizes.iter().all(|&s| s == lo || s == hi)
}

/// Outcome of [`check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    ValidEquitable,
    ValidNotEquitable,
    /// A monochromatic edge.
    Improper {
        u: usize,
        v: usize,
    },
}

/// Classifies a coloring of `g` as proper-and-equitable, proper-only, or
/// improper (with a witness edge).
pub fn check(g: &Graph, c: &Coloring) -> Result<Verdict, ColoringError> {
    if c.n() != g.n() {
        return Err(ColoringError::LengthMismatch { coloring: c.n(), graph: g.n() });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| c.color(u) == c.color(v)) {
        return Ok(Verdict::Improper { u, v });
    }
    Ok(if c.is_equitable() { Verdict::ValidEquitable } else { Verdict::ValidNotEquitable })
}
