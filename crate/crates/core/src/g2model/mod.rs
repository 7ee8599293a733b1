//! Matrix models of G2 and SU(2,1) on F^8.

pub mod display;
pub mod forms;
pub mod iwasawa;
pub mod lie;
pub mod modulus;
pub mod roots;
pub mod torus;

pub use forms::{j_matrix, other_transpose, pairing, v0, v_rho, TrilinearForm};
pub use iwasawa::{iwasawa_case1, iwasawa_case2, verify_iwasawa, IwasawaCase, IwasawaFactors};
pub use lie::{verify_lie_models, G2AlgebraElement, SU21AlgebraElement};
pub use modulus::{modulus_characters, modulus_from_norms, ModulusValues};
pub use roots::{h_alpha, n_alpha, one_param, weyl_rep, Root, RootDatum};
pub use torus::TorusElement;
