use std::fmt::Display;

use crate::Format;

/// Collects a report as aligned text or as `key=value` lines.
pub struct Out {
    machine: bool,
    buf: String,
    failed: bool,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out { machine: format == Format::Machine, buf: String::new(), failed: false }
    }

    pub fn is_machine(&self) -> bool {
        self.machine
    }

    pub fn kv(&mut self, key: &str, value: impl Display) {
        if self.machine {
            self.buf += &format!("{key}={value}\n");
        } else {
            self.buf += &format!("{key}: {value}\n");
        }
    }

    /// Text-mode only.
    pub fn line(&mut self, s: impl Display) {
        if !self.machine {
            self.buf += &format!("{s}\n");
        }
    }

    pub fn raw(&mut self, s: &str) {
        self.buf += s;
    }

    pub fn verdict(&mut self, name: &str, holds: bool, detail: impl Display) {
        let v = if holds { "PASS" } else { "FAIL" };
        self.failed |= !holds;
        if self.machine {
            self.buf += &format!("{name}={v}\n");
        } else {
            let detail = detail.to_string();
            if detail.is_empty() {
                self.buf += &format!("{v}  {name}\n");
            } else {
                self.buf += &format!("{v}  {name}: {detail}\n");
            }
        }
    }

    pub fn mark_failed(&mut self) {
        self.failed = true;
    }

    pub fn finish(self) -> (u8, String) {
        (u8::from(self.failed), self.buf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_sets_exit_code_in_both_formats() {
        for format in [Format::Text, Format::Machine] {
            let mut out = Out::new(format);
            out.verdict("a", true, "");
            let (code, _) = out.finish();
            assert_eq!(code, 0);
            let mut out = Out::new(format);
            out.verdict("a", true, "");
            out.verdict("b", false, "why");
            assert_eq!(out.finish().0, 1);
        }
    }

    #[test]
    fn machine_lines_drop_prose() {
        let mut out = Out::new(Format::Machine);
        out.line("prose");
        out.kv("k", 3);
        out.verdict("check", false, "detail");
        assert_eq!(out.finish().1, "k=3\ncheck=FAIL\n");
    }
}
