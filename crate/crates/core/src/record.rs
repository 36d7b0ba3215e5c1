//! Line-oriented `key=value` records.
//!
//! A record is a kind word followed by fields in insertion order. Values containing whitespace,
//! quotes, `=` or `\` (or empty values) are double-quoted with `"` and `\` escaped.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    kind: String,
    fields: Vec<(String, String)>,
}

fn needs_quotes(v: &str) -> bool {
    v.is_empty() || v.chars().any(|c| c.is_whitespace() || matches!(c, '"' | '=' | '\\'))
}

fn quote(v: &str) -> String {
    if !needs_quotes(v) {
        return v.to_string();
    }
    let mut s = String::with_capacity(v.len() + 2);
    s.push('"');
    for c in v.chars() {
        match c {
            '"' => s.push_str("\\\""),
            '\\' => s.push_str("\\\\"),
            '\n' => s.push_str("\\n"),
            _ => s.push(c),
        }
    }
    s.push('"');
    s
}

impl Record {
    pub fn new(kind: impl Into<String>) -> Self {
        Record { kind: kind.into(), fields: Vec::new() }
    }

    pub fn field(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn kind(&self) -> &str {
        &self.kind
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Parses one line produced by `Display`.
    pub fn parse(line: &str) -> Option<Record> {
        let mut chars = line.trim().chars().peekable();
        let mut kind = String::new();
        while let Some(&c) = chars.peek() {
            if c.is_whitespace() {
                break;
            }
            kind.push(c);
            chars.next();
        }
        if kind.is_empty() {
            return None;
        }
        let mut fields = Vec::new();
        loop {
            while chars.peek().is_some_and(|c| c.is_whitespace()) {
                chars.next();
            }
            if chars.peek().is_none() {
                break;
            }
            let mut key = String::new();
            for c in chars.by_ref() {
                if c == '=' {
                    break;
                }
                key.push(c);
            }
            let mut value = String::new();
            if chars.peek() == Some(&'"') {
                chars.next();
                loop {
                    match chars.next()? {
                        '"' => break,
                        '\\' => match chars.next()? {
                            'n' => value.push('\n'),
                            c => value.push(c),
                        },
                        c => value.push(c),
                    }
                }
            } else {
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() {
                        break;
                    }
                    value.push(c);
                    chars.next();
                }
            }
            fields.push((key, value));
        }
        Some(Record { kind, fields })
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.kind)?;
        for (k, v) in &self.fields {
            write!(f, " {k}={}", quote(v))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quoting_roundtrip() {
        let r = Record::new("entry")
            .field("name", "p2/3")
            .field("gens", "p1^2 + q1^2")
            .field("empty", "")
            .field("q", "a\"b\\c");
        let line = r.to_string();
        assert_eq!(line, r#"entry name=p2/3 gens="p1^2 + q1^2" empty="" q="a\"b\\c""#);
        assert_eq!(Record::parse(&line), Some(r));
    }
}
