//! Edge colorings, palettes and validity checks.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("coloring covers {found} edges but the graph has {expected}")]
    NotTotal { expected: usize, found: usize },
    #[error("color {0} is skipped; colors must be exactly 0..k")]
    NotSurjective(usize),
    #[error("coloring uses {have} colors, fewer than the target {want}")]
    TooFewColors { have: usize, want: usize },
    #[error("a nonempty edge set cannot be colored with zero colors")]
    ZeroTarget,
    #[error("vertex {0} sees more than two colors")]
    NotTwoValid(usize),
    #[error("capacity {capacity} at vertex {vertex} is not allowed")]
    BadCapacity { vertex: usize, capacity: usize },
    #[error("profile covers {found} vertices but the graph has {expected}")]
    ProfileMismatch { expected: usize, found: usize },
}

/// A surjective map from edge ids onto colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<usize>,
    k: usize,
}

impl EdgeColoring {
    /// Fails unless the colors used are exactly `0..k` for some `k`.
    pub fn new(colors: Vec<usize>) -> Result<Self, ColoringError> {
        let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut seen = vec![false; k];
        for &c in &colors {
            seen[c] = true;
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(ColoringError::NotSurjective(missing));
        }
        Ok(EdgeColoring { colors, k })
    }

    /// Compacts arbitrary labels onto `0..k`, preserving their order.
    pub fn relabeled(labels: &[usize]) -> Self {
        let mut distinct: Vec<usize> = labels.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = labels
            .iter()
            .map(|l| distinct.binary_search(l).expect("label present"))
            .collect();
        EdgeColoring {
            colors,
            k: distinct.len(),
        }
    }

    /// Every edge gets color 0.
    pub fn monochromatic(m: usize) -> Self {
        EdgeColoring {
            colors: vec![0; m],
            k: usize::from(m > 0),
        }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, e: usize) -> usize {
        self.colors[e]
    }

    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Lowest edge id of each color class, indexed by color.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.k];
        for (e, &c) in self.colors.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = e;
            }
        }
        reps
    }

    pub fn into_colors(self) -> Vec<usize> {
        self.colors
    }
}

/// Per-vertex bound on the number of distinct incident colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidityProfile {
    Uniform(usize),
    /// The {1,2}-variant: one capacity per vertex.
    PerVertex(Vec<usize>),
}

impl ValidityProfile {
    pub const TWO: ValidityProfile = ValidityProfile::Uniform(2);

    pub fn uniform(q: usize) -> Result<Self, ColoringError> {
        if q == 0 {
            return Err(ColoringError::BadCapacity {
                vertex: 0,
                capacity: 0,
            });
        }
        Ok(ValidityProfile::Uniform(q))
    }

    /// Capacities must each be 1 or 2.
    pub fn per_vertex(f: Vec<usize>) -> Result<Self, ColoringError> {
        if let Some((vertex, &capacity)) = f.iter().enumerate().find(|(_, &c)| c != 1 && c != 2) {
            return Err(ColoringError::BadCapacity { vertex, capacity });
        }
        Ok(ValidityProfile::PerVertex(f))
    }

    pub fn capacity(&self, v: usize) -> usize {
        match self {
            ValidityProfile::Uniform(q) => *q,
            ValidityProfile::PerVertex(f) => f[v],
        }
    }

    pub fn max_capacity(&self) -> usize {
        match self {
            ValidityProfile::Uniform(q) => *q,
            ValidityProfile::PerVertex(f) => f.iter().copied().max().unwrap_or(0),
        }
    }

    pub fn check(&self, g: &Graph) -> Result<(), ColoringError> {
        if let ValidityProfile::PerVertex(f) = self {
            if f.len() != g.n() {
                return Err(ColoringError::ProfileMismatch {
                    expected: g.n(),
                    found: f.len(),
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub owner: usize,
    /// Sorted, distinct.
    pub colors: Vec<usize>,
}

/// The palette of every vertex under `c`. Isolated vertices get empty ones.
pub fn palettes(g: &Graph, c: &EdgeColoring) -> Result<Vec<Palette>, ColoringError> {
    check_total(g, c)?;
    Ok((0..g.n())
        .map(|v| {
            let mut colors: Vec<usize> = g.incident(v).iter().map(|&(_, e)| c.color(e)).collect();
            colors.sort_unstable();
            colors.dedup();
            Palette { owner: v, colors }
        })
        .collect())
}

fn check_total(g: &Graph, c: &EdgeColoring) -> Result<(), ColoringError> {
    if c.len() != g.m() {
        return Err(ColoringError::NotTotal {
            expected: g.m(),
            found: c.len(),
        });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub colors_used: usize,
    /// Vertices whose palette exceeds their capacity, ascending.
    pub violations: Vec<usize>,
}

pub fn verify_coloring(
    g: &Graph,
    c: &EdgeColoring,
    profile: &ValidityProfile,
) -> Result<Verification, ColoringError> {
    profile.check(g)?;
    let violations: Vec<usize> = palettes(g, c)?
        .into_iter()
        .filter(|p| p.colors.len() > profile.capacity(p.owner))
        .map(|p| p.owner)
        .collect();
    Ok(Verification {
        valid: violations.is_empty(),
        colors_used: c.num_colors(),
        violations,
    })
}

/// Spanning subgraph on the lowest-id edge of every color class. Edge `i` of
/// the result is the representative of color `i`.
pub fn character_subgraph(g: &Graph, c: &EdgeColoring) -> Result<Graph, ColoringError> {
    let report = verify_coloring(g, c, &ValidityProfile::TWO)?;
    if let Some(&v) = report.violations.first() {
        return Err(ColoringError::NotTwoValid(v));
    }
    let edges = c.representatives().into_iter().map(|e| g.endpoints(e));
    Ok(Graph::new(g.n(), edges).expect("subgraph of a simple graph is simple"))
}

/// Merges every color `>= k - 1` into color `k - 1`.
///
/// Merging classes never grows a palette, so validity is preserved and the
/// result uses exactly `k` colors.
pub fn compress_colors(c: &EdgeColoring, k: usize) -> Result<EdgeColoring, ColoringError> {
    if c.num_colors() < k {
        return Err(ColoringError::TooFewColors {
            have: c.num_colors(),
            want: k,
        });
    }
    if k == 0 {
        return if c.is_empty() {
            Ok(c.clone())
        } else {
            Err(ColoringError::ZeroTarget)
        };
    }
    let colors = c.colors.iter().map(|&x| x.min(k - 1)).collect();
    Ok(EdgeColoring { colors, k })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring(colors: &[usize]) -> EdgeColoring {
        EdgeColoring::new(colors.to_vec()).unwrap()
    }

    #[test]
    fn surjectivity_is_enforced() {
        assert_eq!(
            EdgeColoring::new(vec![0, 2]),
            Err(ColoringError::NotSurjective(1))
        );
        let c = EdgeColoring::relabeled(&[7, 3, 7, 9]);
        assert_eq!(c.colors(), &[1, 0, 1, 2]);
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn verify_examples() {
        let two = ValidityProfile::TWO;
        let r = verify_coloring(&Graph::cycle(3), &coloring(&[0, 1, 2]), &two).unwrap();
        assert!(r.valid);
        assert_eq!(r.colors_used, 3);

        let r = verify_coloring(&Graph::star(3), &coloring(&[0, 1, 2]), &two).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations, vec![0]);

        let r = verify_coloring(&Graph::path(4), &coloring(&[0, 1, 2]), &two).unwrap();
        assert!(r.valid);
        assert_eq!(r.colors_used, 3);
    }

    #[test]
    fn verify_rejects_partial_colorings() {
        let err = verify_coloring(&Graph::path(4), &coloring(&[0, 1]), &ValidityProfile::TWO);
        assert_eq!(
            err,
            Err(ColoringError::NotTotal {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn per_vertex_profile() {
        assert!(ValidityProfile::per_vertex(vec![1, 2, 3]).is_err());
        let f = ValidityProfile::per_vertex(vec![1, 2, 1]).unwrap();
        let r = verify_coloring(&Graph::path(3), &coloring(&[0, 1]), &f).unwrap();
        assert!(r.valid);
        let f = ValidityProfile::per_vertex(vec![1, 1, 1]).unwrap();
        let r = verify_coloring(&Graph::path(3), &coloring(&[0, 1]), &f).unwrap();
        assert_eq!(r.violations, vec![1]);
    }

    #[test]
    fn character_subgraph_examples() {
        let h = character_subgraph(&Graph::cycle(3), &coloring(&[0, 0, 1])).unwrap();
        assert_eq!(h.edges(), &[(0, 1), (0, 2)]);

        let c4 = Graph::cycle(4);
        let h = character_subgraph(&c4, &coloring(&[0, 1, 2, 3])).unwrap();
        assert_eq!(h, c4);

        let h = character_subgraph(&Graph::path(4), &coloring(&[0, 0, 0])).unwrap();
        assert_eq!(h.m(), 1);

        assert_eq!(
            character_subgraph(&Graph::star(3), &coloring(&[0, 1, 2])),
            Err(ColoringError::NotTwoValid(0))
        );
    }

    #[test]
    fn compress_examples() {
        let c = compress_colors(&coloring(&[0, 1, 2]), 2).unwrap();
        assert_eq!(c.colors(), &[0, 1, 1]);

        let c = compress_colors(&coloring(&[0, 1, 2, 3, 4]), 3).unwrap();
        assert_eq!(c.colors(), &[0, 1, 2, 2, 2]);
        assert!(verify_coloring(&Graph::cycle(5), &c, &ValidityProfile::TWO).unwrap().valid);

        let same = coloring(&[1, 0, 1]);
        assert_eq!(compress_colors(&same, 2).unwrap(), same);

        assert_eq!(
            compress_colors(&coloring(&[0, 1]), 3),
            Err(ColoringError::TooFewColors { have: 2, want: 3 })
        );
        assert_eq!(compress_colors(&coloring(&[0]), 0), Err(ColoringError::ZeroTarget));
    }
}
