use std::time::{Duration, Instant};

use super::ExactError;

/// Optional wall-clock limit threaded through long eliminations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Deadline(None)
    }

    pub fn at(instant: Instant) -> Self {
        Deadline(Some(instant))
    }

    pub fn after(d: Duration) -> Self {
        Deadline(Some(Instant::now() + d))
    }

    /// Reads a number of seconds from the environment variable `name`.
    /// Missing or unparsable values mean no deadline.
    pub fn from_env(name: &str) -> Self {
        std::env::var(name)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|s| s.is_finite() && *s >= 0.0)
            .map(|s| Deadline::after(Duration::from_secs_f64(s)))
            .unwrap_or_default()
    }

    pub fn check(&self) -> Result<(), ExactError> {
        match self.0 {
            Some(t) if Instant::now() >= t => Err(ExactError::Cancelled),
            _ => Ok(()),
        }
    }
}
