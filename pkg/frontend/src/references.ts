/** Bundled reference furniture sets and per-dimension slider metadata. */

import { DimensionName, FurnitureSpecJson } from "./types.js";

export const EXISTING_FIXED: FurnitureSpecJson = {
  name: "existing-fixed",
  SH: 457.2,
  SW: 393.7,
  SD: 406.4,
  BH: 304.8,
  BW: 355.6,
  UEB: 406.4,
  STH: 241.3,
  STC: 88.9,
  UTH: 546.1,
  TL: 482.6,
  TD: 749.3,
};

export const EXISTING_ADJUSTABLE: FurnitureSpecJson = {
  name: "existing-adjustable",
  SH: { lo: 431.8, hi: 533.4 },
  SW: 457.2,
  SD: 431.8,
  BH: 304.8,
  BW: 393.7,
  UEB: 406.4,
  STH: { lo: 228.6, hi: 330.2 },
  STC: { lo: 95.25, hi: 196.85 },
  UTH: 628.65,
  TL: 457.2,
  TD: 749.3,
};

export const PROPOSED_FIXED: FurnitureSpecJson = {
  name: "proposed-fixed",
  SH: 430,
  SW: 425,
  SD: 385,
  BH: 350,
  BW: 390,
  UEB: 465,
  STH: 260,
  STC: 200,
  UTH: 645,
  TL: 482.6,
  TD: 749.3,
};

export const PROPOSED_ADJUSTABLE: FurnitureSpecJson = {
  name: "proposed-adjustable",
  SH: { lo: 400, hi: 450 },
  SW: 425,
  SD: 385,
  BH: 350,
  BW: 390,
  UEB: 465,
  STH: { lo: 235, hi: 310 },
  STC: { lo: 95.25, hi: 200 },
  UTH: 645,
  TL: 457.2,
  TD: 749.3,
};

export const REFERENCE_SPECS: readonly FurnitureSpecJson[] = [
  EXISTING_FIXED,
  EXISTING_ADJUSTABLE,
  PROPOSED_FIXED,
  PROPOSED_ADJUSTABLE,
];

export interface DimensionControl {
  name: DimensionName;
  title: string;
  min: number;
  max: number;
  step: number;
}

export const DIMENSION_CONTROLS: readonly DimensionControl[] = [
  { name: "SH", title: "Seat height", min: 350, max: 650, step: 0.1 },
  { name: "SW", title: "Seat width", min: 300, max: 550, step: 0.1 },
  { name: "SD", title: "Seat depth", min: 300, max: 520, step: 0.1 },
  { name: "BH", title: "Backrest height", min: 250, max: 480, step: 0.1 },
  { name: "BW", title: "Backrest width", min: 300, max: 480, step: 0.1 },
  { name: "UEB", title: "Upper edge of backrest", min: 350, max: 560, step: 0.1 },
  { name: "STH", title: "Seat-to-table height", min: 180, max: 380, step: 0.1 },
  { name: "STC", title: "Seat-to-table clearance", min: 60, max: 260, step: 0.1 },
  { name: "UTH", title: "Under-table height", min: 450, max: 800, step: 0.1 },
  { name: "TL", title: "Table length", min: 380, max: 700, step: 0.1 },
  { name: "TD", title: "Table depth", min: 300, max: 900, step: 0.1 },
];
