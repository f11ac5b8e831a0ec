//! Special sequences: complete Bell polynomials, the Trudi-type
//! sequence transforms, harmonic and hyperharmonic numbers, and several
//! Bernoulli families.

mod bell;
mod bernoulli;
pub mod gtrudi;
mod harmonic;

pub use bell::{bell_complete, bell_complete_all, bell_partition_sum, elem_from_power_sums, partitions};
pub use bernoulli::{
    bernoulli, bernoulli_numbers, bernoulli_order, bernoulli_order_table, degen_bernoulli, degen_bernoulli_symbolic,
    degen_bernoulli_symbolic_table, degen_bernoulli_table, norlund, norlund_table,
};
pub use gtrudi::{gtrudi_check, gtrudi_forward, gtrudi_inverse, ForwardRoute, InverseRoute};
pub use harmonic::{harmonic, hyperharmonic};
