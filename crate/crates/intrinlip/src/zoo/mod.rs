//! Concrete metric-group instances.
//!
//! * [`AbelianPlane`]: `ℝ^m × ℝ^k` with the Euclidean distance and trivial
//!   action — the sanity baseline where every constant has a closed form.
//! * [`Heisenberg`]: first Heisenberg group with a homogeneous gauge
//!   distance; `N` is the vertical plane, `H` the horizontal axis.
//! * [`Affine`]: the `a > 0` affine line, isometric to the hyperbolic plane;
//!   translations are normal, dilations form a geodesic axis.
//! * [`Dihedral`]: `D_n = Z_n ⋊ Z_2` under the word metric of `{r, r⁻¹, s}`,
//!   the exactly computable finite oracle.
//!
//! `AffineSwapped` and `DihedralSwapped` exchange the roles of the factors,
//! giving splittings whose codomain is normal; they are used by the suites
//! that need that orientation and are not part of the CLI grammar.

mod abelian;
mod affine;
mod dihedral;
mod heisenberg;

pub use abelian::AbelianPlane;
pub use affine::{Affine, AffineSwapped};
pub use dihedral::{Dihedral, DihedralElem, DihedralSwapped};
pub use heisenberg::Heisenberg;

use crate::{Error, Result, SplitGroup};
use std::sync::Arc;

/// A parsed group instance, ready for suite dispatch.
#[derive(Clone)]
pub enum AnyGroup {
    Abelian(Arc<AbelianPlane>),
    Heisenberg(Arc<Heisenberg>),
    Affine(Arc<Affine>),
    Dihedral(Arc<Dihedral>),
}

/// Dispatch a generic closure over the concrete instance of an [`AnyGroup`].
#[macro_export]
macro_rules! with_group {
    ($any:expr, |$g:ident| $body:expr) => {
        match $any {
            $crate::zoo::AnyGroup::Abelian($g) => $body,
            $crate::zoo::AnyGroup::Heisenberg($g) => $body,
            $crate::zoo::AnyGroup::Affine($g) => $body,
            $crate::zoo::AnyGroup::Dihedral($g) => $body,
        }
    };
}

impl AnyGroup {
    pub fn name(&self) -> String {
        with_group!(self, |g| g.name())
    }

    pub fn group_dim(&self) -> usize {
        with_group!(self, |g| g.group_dim())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, AnyGroup::Dihedral(_))
    }
}

/// Parse a textual group spec: `abelian:m,k` | `heisenberg` | `affine` |
/// `dihedral:n`.
pub fn parse_group_spec(spec: &str) -> Result<AnyGroup> {
    let (kind, args) = match spec.split_once(':') {
        Some((k, a)) => (k.trim(), Some(a.trim())),
        None => (spec.trim(), None),
    };
    match kind {
        "abelian" => {
            let args = args.ok_or_else(|| Error::InvalidSpec("abelian needs m,k".into()))?;
            let parts: Vec<&str> = args.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::InvalidSpec(format!("abelian:{args}: expected m,k")));
            }
            let m: usize = parts[0]
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad dimension {:?}", parts[0])))?;
            let k: usize = parts[1]
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad dimension {:?}", parts[1])))?;
            Ok(AnyGroup::Abelian(Arc::new(AbelianPlane::new(m, k)?)))
        }
        "heisenberg" => Ok(AnyGroup::Heisenberg(Arc::new(Heisenberg::new()))),
        "affine" => Ok(AnyGroup::Affine(Arc::new(Affine::new()))),
        "dihedral" => {
            let args = args.ok_or_else(|| Error::InvalidSpec("dihedral needs n".into()))?;
            let n: u32 = args
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("bad dihedral order {args:?}")))?;
            Ok(AnyGroup::Dihedral(Arc::new(Dihedral::new(n)?)))
        }
        other => Err(Error::InvalidSpec(format!("unknown group kind {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_kinds() {
        assert_eq!(parse_group_spec("abelian:1,1").unwrap().name(), "abelian:1,1");
        assert_eq!(parse_group_spec("heisenberg").unwrap().name(), "heisenberg");
        assert_eq!(parse_group_spec("affine").unwrap().name(), "affine");
        assert_eq!(parse_group_spec("dihedral:4").unwrap().name(), "dihedral:4");
    }

    #[test]
    fn rejects_bad_specs() {
        for bad in ["abelian", "abelian:0,1", "dihedral:1", "dihedral:x", "torus", "abelian:9,9"] {
            assert!(parse_group_spec(bad).is_err(), "{bad} should fail");
        }
    }
}
