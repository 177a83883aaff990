//! Door event scripts and their tab-separated traces.
//!
//! One event per line: `lock`, `unlock`, `pin_ok`, `pin_bad` or
//! `wait <seconds>` with a positive, finite number of seconds. Blank lines
//! and `#` comments are ignored.

use std::fmt::Write as _;

use insider_core::door::{DoorEvent, DoorTraceRow, Seconds};

use crate::diag::{Diagnostic, Diagnostics};

pub const TRACE_HEADER: &str = "step\tevent\tmode\tclock\tpin_timer\tis_open";

pub fn parse_script(text: &str) -> Result<Vec<DoorEvent>, Diagnostics> {
    let mut events = Vec::new();
    let mut diags = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let col_of = |s: &str| s.as_ptr() as usize - content.as_ptr() as usize + 1;
        let words: Vec<&str> = content.split_whitespace().collect();
        let ev = match words.as_slice() {
            [] => continue,
            ["lock"] => Ok(DoorEvent::Lock),
            ["unlock"] => Ok(DoorEvent::Unlock),
            ["pin_ok"] => Ok(DoorEvent::PinCorrect),
            ["pin_bad"] => Ok(DoorEvent::PinIncorrect),
            ["wait", s] => s
                .parse::<f64>()
                .ok()
                .and_then(Seconds::new)
                .map(DoorEvent::Wait)
                .ok_or_else(|| {
                    Diagnostic::new(
                        no,
                        col_of(s),
                        format!("`{s}` is not a positive, finite number of seconds"),
                    )
                }),
            ["wait"] => Err(Diagnostic::new(
                no,
                col_of(words[0]),
                "`wait` needs a number of seconds",
            )),
            [w, ..] if matches!(*w, "lock" | "unlock" | "pin_ok" | "pin_bad" | "wait") => {
                let extra = words[if *w == "wait" { 2 } else { 1 }];
                Err(Diagnostic::new(
                    no,
                    col_of(extra),
                    format!("unexpected `{extra}` after `{w}` event"),
                ))
            }
            [w, ..] => Err(Diagnostic::new(
                no,
                col_of(w),
                format!("unknown event `{w}` (expected lock, unlock, pin_ok, pin_bad or wait)"),
            )),
        };
        match ev {
            Ok(e) => events.push(e),
            Err(d) => diags.push(d),
        }
    }
    if diags.is_empty() {
        Ok(events)
    } else {
        Err(Diagnostics(diags))
    }
}

pub fn write_script(events: &[DoorEvent]) -> String {
    events.iter().map(|e| format!("{e}\n")).collect()
}

/// The header line followed by one line per row.
pub fn write_trace(rows: &[DoorTraceRow]) -> String {
    let mut o = String::from(TRACE_HEADER);
    o.push('\n');
    for r in rows {
        let pin = r.state.pin_timer.map_or_else(|| "-".to_string(), |t| t.to_string());
        writeln!(
            o,
            "{}\t{}\t{}\t{}\t{pin}\t{}",
            r.step, r.event, r.state.mode, r.state.clock, r.is_open
        )
        .unwrap();
    }
    o
}

#[cfg(test)]
mod tests {
    use super::*;
    use insider_core::door::door_run;

    #[test]
    fn parses_all_tokens() {
        let s = parse_script("pin_ok\n  wait 32.5 # buzzer\n\nlock\nunlock\npin_bad\n").unwrap();
        assert_eq!(
            s,
            vec![
                DoorEvent::PinCorrect,
                DoorEvent::wait(32.5),
                DoorEvent::Lock,
                DoorEvent::Unlock,
                DoorEvent::PinIncorrect
            ]
        );
        assert_eq!(parse_script(&write_script(&s)).unwrap(), s);
    }

    #[test]
    fn errors_are_positioned() {
        let e = parse_script("lock\n  wait -3\nopen\nwait 1 2\n").unwrap_err();
        let pos: Vec<(usize, usize)> = e.0.iter().map(|d| (d.line, d.column)).collect();
        assert_eq!(pos, [(2, 8), (3, 1), (4, 8)]);
        assert!(parse_script("wait 0").is_err());
        assert!(parse_script("wait inf").is_err());
        assert!(parse_script("wait NaN").is_err());
    }

    #[test]
    fn trace_format() {
        let rows = door_run(&[DoorEvent::PinCorrect, DoorEvent::wait(32.0)]);
        assert_eq!(
            write_trace(&rows),
            "step\tevent\tmode\tclock\tpin_timer\tis_open\n\
             1\tpin_ok\tnormal\t0\t0\tfalse\n\
             2\twait 32\tnormal\t32\t32\ttrue\n"
        );
        assert_eq!(write_trace(&[]), format!("{TRACE_HEADER}\n"));
    }
}
