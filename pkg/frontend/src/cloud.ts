// Font sizing for the word cloud: linear in frequency between fixed
// bounds, so a word twice as frequent as the rarest shown renders at
// twice the base size.

export const MIN_FONT_PX = 14;
export const MAX_FONT_PX = 28;

export interface SizedWord {
  word: string;
  count: number;
  px: number;
}

export function sizeCloud(
  cloud: { word: string; count: number }[],
): SizedWord[] {
  if (cloud.length === 0) {
    return [];
  }
  const counts = cloud.map((entry) => entry.count);
  const lo = Math.min(...counts);
  const hi = Math.max(...counts);
  return cloud.map(({ word, count }) => ({
    word,
    count,
    px:
      hi === lo
        ? MAX_FONT_PX
        : MIN_FONT_PX + ((count - lo) / (hi - lo)) * (MAX_FONT_PX - MIN_FONT_PX),
  }));
}
