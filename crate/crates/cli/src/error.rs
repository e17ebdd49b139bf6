//! CLI errors carrying the stable exit-code contract:
//! 0 success/clean, 1 verification defects, 2 invalid parameters,
//! 3 parse error, 4 precondition failure.

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Exit code 2.
    InvalidParams(String),
    /// Exit code 3 (covers unreadable input files).
    Parse(String),
    /// Exit code 4.
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidParams(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Precondition(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            CliError::Parse(msg) => write!(f, "parse error: {msg}"),
            CliError::Precondition(msg) => write!(f, "precondition failure: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}
