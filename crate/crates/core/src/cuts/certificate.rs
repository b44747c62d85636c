use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{edge_boundary, Graph};

/// An edge cut `∂A` together with its side `A`.
///
/// When odd, this is the failure certificate: no circuit passes through
/// every edge of an odd cut, and a graph with an odd cut of size `k` has a
/// `k`-set of edges that no circuit covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutCertificate {
    pub side: Vec<usize>,
    pub boundary: EdgeSet,
    pub size: usize,
    pub odd: bool,
}

impl CutCertificate {
    pub fn new(g: &Graph, side: &[usize]) -> Result<Self> {
        let mut side = side.to_vec();
        side.sort_unstable();
        side.dedup();
        let boundary = edge_boundary(g, &side)?;
        let size = boundary.len();
        Ok(CutCertificate {
            side,
            boundary,
            size,
            odd: size % 2 == 1,
        })
    }

    pub(crate) fn from_mask(g: &Graph, inside: &[bool]) -> Self {
        let side: Vec<usize> = (0..g.vertex_count()).filter(|&v| inside[v]).collect();
        CutCertificate::new(g, &side).expect("mask indices are in range")
    }

    /// The same cut described from the other side.
    pub fn flipped(&self, g: &Graph) -> Self {
        let mut inside = vec![true; g.vertex_count()];
        for &v in &self.side {
            inside[v] = false;
        }
        CutCertificate::from_mask(g, &inside)
    }

    /// Recomputes the boundary and parity from the side alone.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fresh = CutCertificate::new(g, &self.side)?;
        if fresh.boundary != self.boundary || fresh.size != self.size || fresh.odd != self.odd {
            return Err(Error::Internal(format!(
                "certificate mismatch: recorded {:?} (size {}), recomputed {:?} (size {})",
                self.boundary, self.size, fresh.boundary, fresh.size
            )));
        }
        Ok(())
    }

    /// Valid, odd and of size at most `bound`.
    pub fn certifies(&self, g: &Graph, bound: usize) -> bool {
        self.validate(g).is_ok() && self.odd && self.size <= bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pendant_vertex_cut() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let c = CutCertificate::new(&g, &[0]).unwrap();
        assert_eq!((c.size, c.odd), (1, true));
        assert!(c.certifies(&g, 1));
        assert!(!c.certifies(&g, 0));
        let f = c.flipped(&g);
        assert_eq!(f.side, vec![1, 2]);
        assert_eq!(f.boundary, c.boundary);
    }

    #[test]
    fn tampered_certificate_fails_validation() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let mut c = CutCertificate::new(&g, &[0]).unwrap();
        c.boundary = EdgeSet::from_ids(2, [1]);
        assert!(c.validate(&g).is_err());
    }
}
