//! Structure theory of split semisimple Lie algebras: Chevalley basis with
//! Iwasawa grading, Killing form, restricted roots, Weyl group and the
//! geometry of `𝔞*`.

mod algebra;
mod roots;
mod spectral;
mod weyl;

pub use algebra::{BasisVector, Family, IwasawaParts, LieAlgebra, PartTag, PositiveRoot, SparseVec};
pub use roots::{dual_gram, inner, inner_complex, reflection, restricted_roots, RootDatum};
pub use spectral::{astar_norm, is_regular, Norm, Regularity, SpectralParameter};
pub use weyl::{preserves_inner_product, weyl_group, WeylGroup};
