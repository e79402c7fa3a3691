pub mod axioms;
pub mod cli;
pub mod coalition;
pub mod error;
pub mod game;
pub mod linalg;
pub mod lp;
pub mod oneconvex;
pub mod oracle;
pub mod rational;
pub mod values;

pub use coalition::Coalition;
pub use error::{Error, Result};
pub use game::{CompleteGame, ExcessProfile, Game, IncompleteGame, KnownShape, PayoffVector};
pub use rational::Rational;
