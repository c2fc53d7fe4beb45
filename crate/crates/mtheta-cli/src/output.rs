use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::args::Format;

pub struct Sink(Box<dyn Write + Send>);

impl Sink {
    pub fn open(path: Option<&Path>) -> Result<Sink> {
        Ok(Sink(match path {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).with_context(|| format!("creating {}", p.display()))?,
            )),
            None => Box::new(BufWriter::new(io::stdout())),
        }))
    }

    /// Rows as CSV with a header, a JSON array, or plain lines from `plain`.
    pub fn emit<T: Serialize>(
        &mut self,
        format: Format,
        rows: &[T],
        plain: impl Fn(&T) -> String,
    ) -> Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut self.0);
                for r in rows {
                    w.serialize(r)?;
                }
                w.flush()?;
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut self.0, rows)?;
                writeln!(self.0)?;
            }
            Format::Plain => {
                for r in rows {
                    writeln!(self.0, "{}", plain(r))?;
                }
            }
        }
        Ok(())
    }

    pub fn line(&mut self, s: &str) -> Result<()> {
        writeln!(self.0, "{s}")?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.0.flush()?;
        Ok(())
    }
}
