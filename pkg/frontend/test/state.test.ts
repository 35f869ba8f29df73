import { describe, expect, it } from "vitest";

import {
  CalculatorState,
  DEFAULT_INPUTS,
  RequestSequencer,
  stateFromQuery,
  stateToQuery,
  validateInputs,
} from "../src/state.js";

describe("URL state", () => {
  it("round-trips a single scenario", () => {
    const state: CalculatorState = {
      a: { p: 0.005, n_per_group: 32, effect_size_sd: 0.8, prior_h1: 0.3, alpha: 0.01, approach: "p_less_than" },
      b: null,
      sweep: "prior",
    };
    expect(stateFromQuery(stateToQuery(state))).toEqual(state);
  });

  it("round-trips two scenarios for the compare view", () => {
    const state: CalculatorState = {
      a: { ...DEFAULT_INPUTS, p: 0.05 },
      b: { ...DEFAULT_INPUTS, p: 0.005, n_per_group: 64 },
      sweep: "p",
    };
    const query = stateToQuery(state);
    expect(query).toContain("p2=0.005");
    expect(stateFromQuery(query)).toEqual(state);
  });

  it("falls back to defaults on an empty or junk query", () => {
    expect(stateFromQuery("")).toEqual({ a: DEFAULT_INPUTS, b: null, sweep: "p" });
    const fromJunk = stateFromQuery("p=banana&sweep=nonsense");
    expect(fromJunk.a.p).toBe(DEFAULT_INPUTS.p);
    expect(fromJunk.sweep).toBe("p");
  });
});

describe("validateInputs", () => {
  it("accepts the defaults", () => {
    expect(validateInputs(DEFAULT_INPUTS).size).toBe(0);
  });

  it("mirrors the service bounds field by field", () => {
    const bad = { p: 2, n_per_group: 1, effect_size_sd: -1, prior_h1: 1.2, alpha: 0, approach: "p_equals" as const };
    const errors = validateInputs(bad);
    expect(new Set(errors.keys())).toEqual(
      new Set(["p", "n_per_group", "effect_size_sd", "prior_h1", "alpha"]),
    );
  });

  it("rejects non-integer group sizes", () => {
    expect(validateInputs({ ...DEFAULT_INPUTS, n_per_group: 2.5 }).has("n_per_group")).toBe(true);
  });
});

describe("RequestSequencer", () => {
  it("discards responses for superseded requests", () => {
    const seq = new RequestSequencer();
    const first = seq.begin();
    const second = seq.begin();
    expect(seq.isCurrent(first)).toBe(false); // stale: must not render
    expect(seq.isCurrent(second)).toBe(true);
  });

  it("fresh request wins regardless of landing order", () => {
    const seq = new RequestSequencer();
    const t1 = seq.begin();
    const t2 = seq.begin();
    // t2's response lands first and renders; t1's lands later and is dropped
    expect(seq.isCurrent(t2)).toBe(true);
    expect(seq.isCurrent(t1)).toBe(false);
  });
});
