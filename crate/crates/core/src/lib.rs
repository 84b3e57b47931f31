pub mod exact;
pub mod resultants;
pub mod parse;
pub mod singularity;
pub mod degeneration;
pub mod elliptic;
pub mod chern;
