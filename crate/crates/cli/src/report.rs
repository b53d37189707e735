use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Markdown,
    Csv,
    Json,
}

/// A titled table plus one JSON record per row.
pub struct Section {
    pub title: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub records: Vec<Value>,
}

pub struct Report {
    pub command: &'static str,
    pub seed: u64,
    pub sections: Vec<Section>,
}

#[derive(Serialize)]
struct JsonSection<'a> {
    title: &'a str,
    rows: &'a [Value],
}

#[derive(Serialize)]
struct JsonReport<'a> {
    command: &'a str,
    seed: u64,
    sections: Vec<JsonSection<'a>>,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let r = JsonReport {
                    command: self.command,
                    seed: self.seed,
                    sections: self
                        .sections
                        .iter()
                        .map(|s| JsonSection {
                            title: &s.title,
                            rows: &s.records,
                        })
                        .collect(),
                };
                serde_json::to_string_pretty(&r).expect("report serializes") + "\n"
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
            Format::Markdown => self.markdown(),
        }
    }

    fn header(&self) -> String {
        format!("painleve {} seed={}", self.command, self.seed)
    }

    fn text(&self) -> String {
        let mut out = format!("# {}\n", self.header());
        for s in &self.sections {
            out.push_str(&format!("\n## {}\n", s.title));
            let mut widths: Vec<usize> = s.columns.iter().map(|c| c.chars().count()).collect();
            for r in &s.rows {
                for (w, c) in widths.iter_mut().zip(r) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |cells: Vec<&str>| {
                let padded: Vec<String> =
                    cells.iter().zip(&widths).map(|(c, w)| format!("{:<w$}", c, w = *w)).collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            out.push_str(&line(s.columns.clone()));
            for r in &s.rows {
                out.push_str(&line(r.iter().map(String::as_str).collect()));
            }
        }
        out
    }

    fn markdown(&self) -> String {
        let mut out = format!("<!-- {} -->\n", self.header());
        for s in &self.sections {
            out.push_str(&format!("\n### {}\n\n", s.title));
            out.push_str(&format!("| {} |\n", s.columns.join(" | ")));
            out.push_str(&format!("|{}\n", "---|".repeat(s.columns.len())));
            for r in &s.rows {
                let cells: Vec<String> = r.iter().map(|c| c.replace('|', "\\|")).collect();
                out.push_str(&format!("| {} |\n", cells.join(" | ")));
            }
        }
        out
    }

    /// One CSV document; the section title and seed are leading columns.
    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let columns = self.sections.first().map(|s| s.columns.clone()).unwrap_or_default();
        let same = self.sections.iter().all(|s| s.columns == columns);
        let mut written_header = false;
        for s in &self.sections {
            if !written_header || !same {
                let mut h = vec!["section", "seed"];
                h.extend(&s.columns);
                w.write_record(&h).expect("in-memory write");
                written_header = true;
            }
            for r in &s.rows {
                let mut rec = vec![s.title.clone(), self.seed.to_string()];
                rec.extend(r.iter().cloned());
                w.write_record(&rec).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }
}
