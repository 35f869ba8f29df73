import { describe, expect, it } from "vitest";

import { fmt } from "../src/format.js";

describe("fmt", () => {
  it("renders four significant digits with trailing zeros trimmed", () => {
    expect(fmt(0.26620451015414526)).toBe("0.2662");
    expect(fmt(2.7565103589753295)).toBe("2.757");
    expect(fmt(15.627955849328451)).toBe("15.63");
    expect(fmt(0.5)).toBe("0.5");
    expect(fmt(1.0)).toBe("1");
  });

  it("switches to exponential outside the comfortable range", () => {
    expect(fmt(1e-6)).toBe("1.000e-6");
    expect(fmt(123456789)).toBe("1.235e+8");
  });

  it("handles missing values", () => {
    expect(fmt(null)).toBe("–");
    expect(fmt(undefined)).toBe("–");
    expect(fmt(Number.NaN)).toBe("–");
    expect(fmt(0)).toBe("0");
  });

  it("is deterministic (display is a pure function of the server value)", () => {
    const v = 0.03381557858828789;
    expect(fmt(v)).toBe(fmt(v));
  });
});
