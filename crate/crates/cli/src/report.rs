use std::fmt::Display;

use cy2::moduli::Verdict;

/// Line-oriented `key = value` report with the verdicts it carries.
#[derive(Default)]
pub(crate) struct Report {
    lines: Vec<String>,
    verdicts: Vec<Verdict>,
}

impl Report {
    pub(crate) fn kv(&mut self, key: &str, value: impl Display) {
        self.lines.push(format!("{key} = {value}"));
    }

    /// Appends preformatted lines, such as a quiver or matrix file body.
    pub(crate) fn raw(&mut self, text: &str) {
        self.lines.extend(text.lines().map(str::to_string));
    }

    pub(crate) fn verdict(&mut self, v: Verdict) {
        self.kv("verdict", v);
        self.verdicts.push(v);
    }

    pub(crate) fn append(&mut self, other: Report) {
        self.lines.extend(other.lines);
        self.verdicts.extend(other.verdicts);
    }

    /// True when verdicts were produced and all of them are out of scope.
    pub(crate) fn only_out_of_scope(&self) -> bool {
        !self.verdicts.is_empty() && self.verdicts.iter().all(|v| *v == Verdict::OutOfScope)
    }

    pub(crate) fn lines(&self) -> &[String] {
        &self.lines
    }
}

/// Exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INCONSISTENCY: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const OUT_OF_SCOPE: i32 = 3;
    pub const EXHAUSTED: i32 = 4;
}

#[derive(Debug)]
pub(crate) struct Fail {
    pub(crate) code: i32,
    pub(crate) message: String,
}

impl Fail {
    pub(crate) fn input(message: impl Into<String>) -> Self {
        Fail {
            code: exit::INPUT,
            message: message.into(),
        }
    }

    pub(crate) fn inconsistency(message: impl Into<String>) -> Self {
        Fail {
            code: exit::INCONSISTENCY,
            message: message.into(),
        }
    }
}

impl From<cy2::Error> for Fail {
    fn from(e: cy2::Error) -> Self {
        let code = match e {
            cy2::Error::Inconsistency(_) => exit::INCONSISTENCY,
            cy2::Error::Exhausted { .. } => exit::EXHAUSTED,
            _ => exit::INPUT,
        };
        Fail {
            code,
            message: e.to_string(),
        }
    }
}

pub(crate) type Outcome = std::result::Result<(), Fail>;
