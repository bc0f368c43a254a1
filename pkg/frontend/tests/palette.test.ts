import { describe, expect, it } from "vitest";

import { charOf, colorFor, isLight } from "../src/palette.js";

describe("palette", () => {
  it("maps color indices back to board letters", () => {
    expect(charOf(0)).toBe("a");
    expect(charOf(6)).toBe("g");
    expect(charOf(22)).toBe("w");
  });

  it("keeps the gadget letters on their literal colors", () => {
    expect(colorFor("k".charCodeAt(0) - 97)).toBe("#17171a");
    expect(colorFor("w".charCodeAt(0) - 97)).toBe("#f2f0e9");
    expect(colorFor("r".charCodeAt(0) - 97)).toBe("#d33f49");
    expect(colorFor("g".charCodeAt(0) - 97)).toBe("#3c9d4e");
    expect(colorFor("b".charCodeAt(0) - 97)).toBe("#2e6fd8");
    expect(colorFor("e".charCodeAt(0) - 97)).toBe("#8e8e93");
  });

  it("derives a stable hue for letters outside the fixed set", () => {
    const h = "h".charCodeAt(0) - 97;
    expect(colorFor(h)).toBe(colorFor(h));
    expect(colorFor(h)).toMatch(/^hsl\(/);
    expect(colorFor(h)).not.toBe(colorFor(h + 1));
  });

  it("flags only white as a light color", () => {
    expect(isLight("w".charCodeAt(0) - 97)).toBe(true);
    expect(isLight("k".charCodeAt(0) - 97)).toBe(false);
    expect(isLight("a".charCodeAt(0) - 97)).toBe(false);
  });
});
