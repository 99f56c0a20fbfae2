//! Two renderings of a command result: prose for people, `key=value` lines for scripts.

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Machine,
}

#[derive(Debug)]
struct Item {
    key: &'static str,
    plain: String,
    machine: String,
}

#[derive(Debug, Default)]
pub struct Report {
    items: Vec<Item>,
}

impl Report {
    fn push(&mut self, key: &'static str, plain: String, machine: String) -> &mut Self {
        self.items.push(Item { key, plain, machine });
        self
    }

    /// A value printed bare in plain mode.
    pub fn value(&mut self, key: &'static str, v: impl ToString) -> &mut Self {
        let v = v.to_string();
        self.push(key, v.clone(), v)
    }

    /// A value printed as `label: value` in plain mode.
    pub fn labelled(&mut self, key: &'static str, label: &str, v: impl ToString) -> &mut Self {
        let v = v.to_string();
        self.push(key, format!("{label}: {v}"), v)
    }

    /// Different wording for the two formats, e.g. `invalid` versus `valid=false`.
    pub fn worded(&mut self, key: &'static str, plain: &str, machine: impl ToString) -> &mut Self {
        self.push(key, plain.to_string(), machine.to_string())
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for it in &self.items {
            match format {
                Format::Plain => {
                    out.push_str(&it.plain);
                    out.push('\n');
                }
                // multi-line values repeat their key so every line stays self-describing
                Format::Machine => {
                    for line in it.machine.lines() {
                        out.push_str(&format!("{}={line}\n", it.key));
                    }
                    if it.machine.is_empty() {
                        out.push_str(&format!("{}=\n", it.key));
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_lines_repeat_keys() {
        let mut r = Report::default();
        r.value("type", "a^c+").labelled("model", "model", "x = 1\ny = 2").worded("valid", "invalid", false);
        assert_eq!(r.render(Format::Plain), "a^c+\nmodel: x = 1\ny = 2\ninvalid\n");
        assert_eq!(r.render(Format::Machine), "type=a^c+\nmodel=x = 1\nmodel=y = 2\nvalid=false\n");
    }
}
