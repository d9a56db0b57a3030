//! Lerch transcendent `Φ(z, s, a) = Σ_{n≥0} z^n / (n+a)^s` and polygamma.

mod bernoulli;
mod lerch;
mod polygamma;

pub use bernoulli::bernoulli;
pub use lerch::{lerch_inner_sum, lerch_phi_direct, lerch_phi_transformed, LerchArgs};
pub use polygamma::polygamma;
