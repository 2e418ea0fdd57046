import { describe, expect, it } from "vitest";

import { EXISTING_ADJUSTABLE, EXISTING_FIXED } from "../src/references.js";
import { fromSpecJson, sessionProblems, toSpecJson, toggleMode } from "../src/session.js";
import { validateDimension, validateSpec } from "../src/validate.js";

describe("validateSpec", () => {
  it("accepts the bundled references", () => {
    expect(validateSpec(EXISTING_FIXED)).toEqual([]);
    expect(validateSpec(EXISTING_ADJUSTABLE)).toEqual([]);
  });

  it("rejects non-positive values with a field-level message", () => {
    expect(validateSpec({ ...EXISTING_FIXED, SW: -1 })).toEqual(["SW must be > 0"]);
    expect(validateSpec({ ...EXISTING_FIXED, SW: 0 })).toEqual(["SW must be > 0"]);
  });

  it("rejects inverted ranges", () => {
    const broken = { ...EXISTING_ADJUSTABLE, SH: { lo: 500, hi: 400 } };
    expect(validateSpec(broken)).toEqual(["SH range requires lo < hi"]);
  });

  it("names missing dimensions", () => {
    const partial: Record<string, number> = {};
    const problems = validateSpec(partial);
    expect(problems).toContain("missing dimension SH");
    expect(problems).toHaveLength(11);
  });

  it("rejects non-numeric input", () => {
    expect(validateDimension("TD", Number.NaN)).toBe("TD must be numeric");
    expect(validateDimension("TD", { lo: Number.NaN, hi: 10 })).toBe(
      "TD range must be numeric",
    );
  });
});

describe("session state", () => {
  it("round-trips a spec through the editable form", () => {
    const editable = fromSpecJson(EXISTING_ADJUSTABLE);
    const back = toSpecJson(editable, "existing-adjustable");
    expect(back).toEqual(EXISTING_ADJUSTABLE);
  });

  it("blocks submission while a dimension is invalid", () => {
    const editable = fromSpecJson(EXISTING_FIXED);
    editable.SW = { mode: "fixed", value: -1 };
    expect(sessionProblems(editable)).toEqual(["SW must be > 0"]);
    editable.SW = { mode: "fixed", value: 420 };
    expect(sessionProblems(editable)).toEqual([]);
  });

  it("toggles between fixed and ranged without losing the anchor value", () => {
    const fixed = { mode: "fixed", value: 457.2 } as const;
    const ranged = toggleMode(fixed);
    expect(ranged).toEqual({ mode: "range", lo: 457.2, hi: 507.2 });
    expect(toggleMode(ranged)).toEqual({ mode: "fixed", value: 457.2 });
  });
});
