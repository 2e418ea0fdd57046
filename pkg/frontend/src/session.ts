/** Editable design state behind the sliders.
 *
 * Each dimension is either a single value or a lo/hi range (the adjustable
 * toggle). The session can always render, but it only produces a sendable
 * spec when every dimension passes the invariants.
 */

import { FurnitureSpecJson, DIMENSIONS, DimensionName, isAdjustable } from "./types.js";
import { validateSpec } from "./validate.js";

export type EditableDimension =
  | { mode: "fixed"; value: number }
  | { mode: "range"; lo: number; hi: number };

export type EditableSpec = Record<DimensionName, EditableDimension>;

export function fromSpecJson(spec: FurnitureSpecJson): EditableSpec {
  const editable = {} as EditableSpec;
  for (const dim of DIMENSIONS) {
    const value = spec[dim];
    editable[dim] = isAdjustable(value)
      ? { mode: "range", lo: value.lo, hi: value.hi }
      : { mode: "fixed", value };
  }
  return editable;
}

export function toSpecJson(editable: EditableSpec, name: string): FurnitureSpecJson {
  const spec = { name } as FurnitureSpecJson;
  for (const dim of DIMENSIONS) {
    const entry = editable[dim];
    spec[dim] = entry.mode === "fixed" ? entry.value : { lo: entry.lo, hi: entry.hi };
  }
  return spec;
}

/** Violations of the current state; requests are blocked until empty. */
export function sessionProblems(editable: EditableSpec): string[] {
  return validateSpec(toSpecJson(editable, "candidate"));
}

/** Flip one dimension between fixed and ranged, keeping values sensible. */
export function toggleMode(entry: EditableDimension, span = 50): EditableDimension {
  if (entry.mode === "fixed") {
    return { mode: "range", lo: entry.value, hi: entry.value + span };
  }
  return { mode: "fixed", value: entry.lo };
}
