//! The binomial chromatic bound and colorings driven by divisibility
//! certificates.

use serde::{Deserialize, Serialize};

use crate::divisibility::{verify_certificate, Certificate, CertificateKind};
use crate::error::ColoringError;
use crate::graph::Graph;

/// `C(omega + k - 1, k)`, the largest χ a perfectly k-divisible graph with
/// clique number `omega` can have.
pub fn chi_bound(omega: u64, k: u64) -> Result<u64, ColoringError> {
    if k == 0 {
        return Err(ColoringError::ZeroLevel);
    }
    let top = omega
        .checked_add(k - 1)
        .ok_or(ColoringError::Overflow { top: u64::MAX, k })?;
    binomial(top, k).ok_or(ColoringError::Overflow { top, k })
}

/// Exact `C(n, r)`, `None` on overflow.
pub fn binomial(n: u64, r: u64) -> Option<u64> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) is divisible by (i + 1) because acc = C(n, i)
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// A vertex coloring covering every vertex of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    /// `colors[v]` is the color of vertex `v`.
    pub colors: Vec<usize>,
    pub palette_size: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Self {
        let palette_size = distinct(&colors);
        Coloring { colors, palette_size }
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut seen: Vec<usize> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Why [`verify_coloring`] rejected a coloring.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ColoringViolation {
    #[error("coloring covers {found} vertices, graph has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("edge ({0}, {1}) is monochromatic")]
    Monochromatic(usize, usize),
    #[error("palette_size {claimed} disagrees with {actual} distinct colors")]
    PaletteMismatch { claimed: usize, actual: usize },
    #[error("{used} colors exceed the budget of {budget}")]
    OverBudget { used: usize, budget: usize },
}

pub fn verify_coloring(g: &Graph, c: &Coloring, budget: usize) -> Result<(), ColoringViolation> {
    if c.colors.len() != g.n() {
        return Err(ColoringViolation::WrongLength {
            expected: g.n(),
            found: c.colors.len(),
        });
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| c.colors[u] == c.colors[v]) {
        return Err(ColoringViolation::Monochromatic(u, v));
    }
    let actual = distinct(&c.colors);
    if actual != c.palette_size {
        return Err(ColoringViolation::PaletteMismatch {
            claimed: c.palette_size,
            actual,
        });
    }
    if actual > budget {
        return Err(ColoringViolation::OverBudget { used: actual, budget });
    }
    Ok(())
}

/// Colors `g` along a verified certificate: the `X1` subtree takes colors
/// `0..a`, the `X2` subtree is shifted to `a..a+b`, stable leaves use one
/// color and perfect leaves an optimal (ω-color) assignment.
pub fn color_from_certificate(g: &Graph, cert: &Certificate) -> Result<Coloring, ColoringError> {
    verify_certificate(g, cert)?;
    if cert.set != g.vertices() {
        return Err(ColoringError::PartialRoot {
            covered: cert.set.len(),
            n: g.n(),
        });
    }
    let mut colors = vec![usize::MAX; g.n()];
    let used = paint(g, cert, 0, &mut colors);
    debug_assert!(colors.iter().all(|&c| c < used.max(1)));
    Ok(Coloring {
        colors,
        palette_size: used,
    })
}

/// Paints the node's set with colors starting at `offset`; returns the
/// number of colors used.
fn paint(g: &Graph, node: &Certificate, offset: usize, colors: &mut [usize]) -> usize {
    match &node.kind {
        CertificateKind::StableLeaf => {
            for v in node.set.iter() {
                colors[v] = offset;
            }
            usize::from(!node.set.is_empty())
        }
        CertificateKind::PerfectLeaf => {
            let assignment = g.optimal_coloring_in(node.set);
            let mut used = 0;
            for (v, c) in assignment {
                colors[v] = offset + c;
                used = used.max(c + 1);
            }
            used
        }
        CertificateKind::Split { left, right } => {
            let a = paint(g, left, offset, colors);
            let b = paint(g, right, offset + a, colors);
            a + b
        }
    }
}

/// Greedily merges color classes: each class, in color order, moves onto
/// the lowest earlier class it has no edges to. Never increases the palette.
pub fn compress_colors(g: &Graph, c: &Coloring) -> Coloring {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = c.colors.clone();
    order.sort_unstable();
    order.dedup();
    for color in order {
        let members: Vec<usize> = (0..c.colors.len()).filter(|&v| c.colors[v] == color).collect();
        let target = classes.iter().position(|class| {
            class
                .iter()
                .all(|&u| members.iter().all(|&v| !g.has_edge(u, v)))
        });
        match target {
            Some(i) => classes[i].extend(members),
            None => classes.push(members),
        }
    }
    let mut colors = vec![0; c.colors.len()];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            colors[v] = i;
        }
    }
    Coloring::new(colors)
}
