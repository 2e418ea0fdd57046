/** Client-side gate mirroring the service's dimension invariants.
 *
 * The dashboard never sends a request while any of these fail; the service
 * would reject them with a 400 anyway, this just keeps the feedback local
 * and instant.
 */

import {
  DIMENSIONS,
  DimensionValueJson,
  FurnitureSpecJson,
  isAdjustable,
} from "./types.js";

export function validateDimension(
  name: string,
  value: DimensionValueJson | undefined,
): string | null {
  if (value === undefined) {
    return `missing dimension ${name}`;
  }
  if (isAdjustable(value)) {
    if (!Number.isFinite(value.lo) || !Number.isFinite(value.hi)) {
      return `${name} range must be numeric`;
    }
    if (value.lo <= 0 || value.hi <= 0) {
      return `${name} must be > 0`;
    }
    if (value.lo >= value.hi) {
      return `${name} range requires lo < hi`;
    }
    return null;
  }
  if (!Number.isFinite(value)) {
    return `${name} must be numeric`;
  }
  if (value <= 0) {
    return `${name} must be > 0`;
  }
  return null;
}

/** All invariant violations of a candidate spec; empty means sendable. */
export function validateSpec(spec: Partial<FurnitureSpecJson>): string[] {
  const problems: string[] = [];
  for (const dim of DIMENSIONS) {
    const problem = validateDimension(dim, spec[dim]);
    if (problem !== null) {
      problems.push(problem);
    }
  }
  return problems;
}
