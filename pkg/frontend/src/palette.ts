// Fixed palette for the first six plain colors plus the gadget letters,
// which keep their literal colors so generated boards read correctly.
// Anything else gets a deterministic hue from its index.

const LETTER: Record<string, string> = {
  a: "#e4572e",
  b: "#2e6fd8", // blue separators
  c: "#f3c13a",
  d: "#8c5db8",
  e: "#8e8e93", // gray plinths and crowns
  f: "#2ec4b6",
  g: "#3c9d4e", // green element bars
  k: "#17171a", // black fences, locks, bombs
  r: "#d33f49", // red indicators and matchers
  w: "#f2f0e9", // white filler
};

export const EMPTY_COLOR = "transparent";

export function charOf(color: number): string {
  return String.fromCharCode(97 + color);
}

export function colorFor(color: number): string {
  const fixed = LETTER[charOf(color)];
  if (fixed) return fixed;
  return `hsl(${(color * 47) % 360} 65% 55%)`;
}

// Light cells need dark outlines and text to stay visible.
export function isLight(color: number): boolean {
  return charOf(color) === "w";
}
