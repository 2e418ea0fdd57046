/** Wire types shared with the analysis service. */

export type DimensionName =
  | "SH"
  | "SW"
  | "SD"
  | "BH"
  | "BW"
  | "UEB"
  | "STH"
  | "STC"
  | "UTH"
  | "TL"
  | "TD";

export const DIMENSIONS: readonly DimensionName[] = [
  "SH",
  "SW",
  "SD",
  "BH",
  "BW",
  "UEB",
  "STH",
  "STC",
  "UTH",
  "TL",
  "TD",
];

/** A fixed dimension is a bare number; an adjustable one is a closed range. */
export type DimensionValueJson = number | { lo: number; hi: number };

export type FurnitureSpecJson = { name: string } & {
  [dim in DimensionName]: DimensionValueJson;
};

export interface MismatchRowJson {
  criterion: string;
  label: string;
  gender: "Male" | "Female";
  n: number;
  match_pct: number;
  low_pct: number | null;
  high_pct: number | null;
  total_mismatch_pct: number;
}

export interface MismatchReportJson {
  spec: string;
  counts: Record<string, number>;
  notes: string[];
  rows: MismatchRowJson[];
}

export function isAdjustable(
  value: DimensionValueJson,
): value is { lo: number; hi: number } {
  return typeof value === "object" && value !== null;
}
