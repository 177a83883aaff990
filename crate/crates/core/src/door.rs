//! Discrete-event simulation of the cockpit door lock.
//!
//! Three modes: `Normal`, `Unlocked` and `Locked`. In `Normal` a correct PIN
//! starts a timer; the door opens for the half-open window `[30, 35)` seconds
//! after that and the timer is cleared at 35. `lock` and `unlock` take effect
//! immediately from any mode. `Locked` disables the keypad and falls back to
//! `Normal` once 300 seconds have passed. `Unlocked` persists until `lock`.

use alloc::vec::Vec;
use core::fmt;

pub const OPEN_AFTER: f64 = 30.0;
pub const OPEN_UNTIL: f64 = 35.0;
pub const LOCKOUT: f64 = 300.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DoorMode {
    Normal,
    Unlocked,
    Locked,
}

impl DoorMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DoorMode::Normal => "normal",
            DoorMode::Unlocked => "unlocked",
            DoorMode::Locked => "locked",
        }
    }
}

impl fmt::Display for DoorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A strictly positive, finite duration in seconds.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct Seconds(f64);

impl Seconds {
    pub fn new(s: f64) -> Option<Seconds> {
        (s.is_finite() && s > 0.0).then_some(Seconds(s))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DoorEvent {
    Lock,
    Unlock,
    PinCorrect,
    PinIncorrect,
    Wait(Seconds),
}

impl DoorEvent {
    /// Panics unless `s` is positive and finite; see [`Seconds::new`].
    pub fn wait(s: f64) -> DoorEvent {
        DoorEvent::Wait(Seconds::new(s).expect("wait duration must be positive and finite"))
    }
}

impl fmt::Display for DoorEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DoorEvent::Lock => f.write_str("lock"),
            DoorEvent::Unlock => f.write_str("unlock"),
            DoorEvent::PinCorrect => f.write_str("pin_ok"),
            DoorEvent::PinIncorrect => f.write_str("pin_bad"),
            DoorEvent::Wait(s) => write!(f, "wait {}", s.0),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DoorState {
    pub mode: DoorMode,
    /// Seconds since the current mode was entered.
    pub clock: f64,
    /// Seconds since a correct PIN, only in `Normal`.
    pub pin_timer: Option<f64>,
}

impl Default for DoorState {
    fn default() -> Self {
        DoorState {
            mode: DoorMode::Normal,
            clock: 0.0,
            pin_timer: None,
        }
    }
}

impl DoorState {
    fn enter(mode: DoorMode) -> DoorState {
        DoorState {
            mode,
            clock: 0.0,
            pin_timer: None,
        }
    }

    pub fn is_open(&self) -> bool {
        self.mode == DoorMode::Normal && matches!(self.pin_timer, Some(t) if (OPEN_AFTER..OPEN_UNTIL).contains(&t))
    }
}

pub fn door_step(s: DoorState, e: DoorEvent) -> DoorState {
    match e {
        DoorEvent::Lock => DoorState::enter(DoorMode::Locked),
        DoorEvent::Unlock => DoorState::enter(DoorMode::Unlocked),
        // a second correct PIN keeps the running timer
        DoorEvent::PinCorrect if s.mode == DoorMode::Normal => DoorState {
            pin_timer: Some(s.pin_timer.unwrap_or(0.0)),
            ..s
        },
        DoorEvent::PinCorrect | DoorEvent::PinIncorrect => s,
        DoorEvent::Wait(dt) => {
            let dt = dt.0;
            let mut next = DoorState {
                clock: s.clock + dt,
                pin_timer: s.pin_timer.map(|t| t + dt),
                ..s
            };
            if matches!(next.pin_timer, Some(t) if t >= OPEN_UNTIL) {
                next.pin_timer = None;
            }
            if next.mode == DoorMode::Locked && next.clock >= LOCKOUT {
                next = DoorState::enter(DoorMode::Normal);
            }
            next
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DoorTraceRow {
    /// 1-based position of the event in the script.
    pub step: usize,
    pub event: DoorEvent,
    pub state: DoorState,
    pub is_open: bool,
}

/// Folds `door_step` over the script from the default `Normal` state.
pub fn door_run(script: &[DoorEvent]) -> Vec<DoorTraceRow> {
    let mut s = DoorState::default();
    script
        .iter()
        .enumerate()
        .map(|(i, &event)| {
            s = door_step(s, event);
            DoorTraceRow {
                step: i + 1,
                event,
                state: s,
                is_open: s.is_open(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use DoorEvent::*;

    #[test]
    fn open_window_is_half_open() {
        let t = door_run(&[
            PinCorrect,
            DoorEvent::wait(29.5),
            DoorEvent::wait(0.5),
            DoorEvent::wait(5.0),
        ]);
        let open: Vec<bool> = t.iter().map(|r| r.is_open).collect();
        assert_eq!(open, [false, false, true, false]);
        assert_eq!(t[3].state.pin_timer, None);
    }

    #[test]
    fn lockout_lasts_three_hundred_seconds() {
        let t = door_run(&[
            PinCorrect,
            DoorEvent::wait(10.0),
            Lock,
            DoorEvent::wait(299.0),
            DoorEvent::wait(1.0),
        ]);
        assert_eq!(t[2].state.mode, DoorMode::Locked);
        assert_eq!(t[3].state.mode, DoorMode::Locked);
        assert_eq!(t[4].state, DoorState::default());
    }

    #[test]
    fn unlock_is_immediate_and_persists() {
        let s = door_step(DoorState::enter(DoorMode::Locked), Unlock);
        assert_eq!(s, DoorState::enter(DoorMode::Unlocked));
        let s = door_step(s, DoorEvent::wait(10_000.0));
        assert_eq!(s.mode, DoorMode::Unlocked);
    }

    #[test]
    fn pin_is_ignored_outside_normal() {
        let locked = DoorState::enter(DoorMode::Locked);
        assert_eq!(door_step(locked, PinCorrect), locked);
        assert_eq!(door_step(locked, PinIncorrect), locked);
    }

    #[test]
    fn second_pin_keeps_timer() {
        let t = door_run(&[PinCorrect, DoorEvent::wait(20.0), PinCorrect, DoorEvent::wait(10.0)]);
        assert_eq!(t[2].state.pin_timer, Some(20.0));
        assert!(t[3].is_open);
    }

    #[test]
    fn empty_script_empty_trace() {
        assert!(door_run(&[]).is_empty());
    }

    #[test]
    fn durations_must_be_positive() {
        assert!(Seconds::new(0.0).is_none());
        assert!(Seconds::new(-1.0).is_none());
        assert!(Seconds::new(f64::NAN).is_none());
        assert!(Seconds::new(f64::INFINITY).is_none());
    }
}
