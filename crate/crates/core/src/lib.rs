pub mod cli;
pub mod code;
pub mod gray;
pub mod protocol;
pub mod report;
pub mod resilience;
pub mod ring;
pub mod verifier;
