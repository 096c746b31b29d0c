//! Matroid invariants, each computed along two independent routes where
//! one exists.

pub mod bridge;
pub mod degrees;
pub mod flag;
pub mod transform;
pub mod tutte;
pub mod valuative;
pub mod weights;

pub use bridge::{cf_check, ehrhart, euler_chars, fs_tutte, g_polynomial, CfReport};
pub use degrees::{beta_from_degrees, mixed_degree_generating, taut_degree_polynomial};
pub use flag::{flag_kchi, flag_tutte_kt, lvt};
pub use transform::{coalgebra_recursion_check, t_transform};
pub use tutte::{beta_pair, tutte_convolution, tutte_coranknullity, tutte_delcontr};
pub use valuative::valuativity_demo;
pub use weights::{bergman_weight, csm_weight, MinkowskiWeight};
