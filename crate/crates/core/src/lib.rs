//! King tableaux, semistandard oscillating tableaux and the symplectic crystal
//! structures connecting them to symmetric matrices.

pub mod bijection;
pub mod character;
pub mod crystal;
pub mod error;
pub mod king;
pub mod oscillating;
pub mod partition;
pub mod rsk;
pub mod tableau;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use king::{enumerate_king, king_weight, BarredLetter, KingTableau};
pub use partition::{is_horizontal_strip, is_vertical_strip, Partition};
pub use tableau::{Cell, Ssyt};
pub use weight::WeightVector;
pub use rsk::{c_index, rsk_column, rsk_column_inverse, sym_even_check, IntMatrix, SymEvenMatrix, TwoLineArray};
pub use oscillating::{enumerate_ssot, row_sequence, ssot_weights, OscStrip, Ssot};
pub use bijection::{phi, phi_inverse, psi, psi_inverse, pv_trace, Involution, PvTrace};
pub use crystal::{Crystal, CrystalGraph, Direction, KingCrystal, MatrixCrystal, SkewSsotCrystal, SsotCrystal};
pub use character::{
    conjecture_lhs, conjecture_verify, decompose_sp, dual_pieri_count, king_character, schur_eval,
    sundaram_h_count, weyl_character, LaurentCharacter,
};
