pub mod error;
pub mod poly;

pub use error::{Error, Result};
pub mod factor;
pub mod par;
pub mod spread;
pub mod hull;
pub mod bound;
pub mod io;
pub mod oracle;
