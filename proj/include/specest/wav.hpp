#ifndef SPECEST_WAV_HPP
#define SPECEST_WAV_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace specest {

struct WavFileOrigin {
    std::string path;
};
struct SyntheticOrigin {
    std::uint64_t seed;
};
using CarrierOrigin = std::variant<WavFileOrigin, SyntheticOrigin>;

/// Mono audio samples normalized to [-1, 1]. The sample rate is carried as
/// metadata only; all analysis runs in normalized frequency.
struct AudioCarrier {
    std::vector<double> samples;
    int sample_rate = 8000;
    CarrierOrigin origin = SyntheticOrigin{0};
};

/// Reads a RIFF/WAVE file. Accepts PCM u8 and i16 and IEEE float32, mono or
/// multichannel (channels are averaged into mono). Integer samples are
/// scaled by the type's full-scale magnitude (i16: 1/32768, u8: (s-128)/128).
/// Float data whose peak exceeds 1 is scaled down to peak 1.
/// Raises UnsupportedFormat for other codecs or bit depths, MalformedFile
/// for broken chunk structure, IoError when the file cannot be opened.
AudioCarrier load_wav(const std::string& path);

/// Writes mono 16-bit PCM, little-endian. Samples must lie in [-1, 1]
/// (std::invalid_argument otherwise). Quantization is round(s * 32768)
/// clamped to [-32768, 32767], which keeps the round-trip error within
/// 1/32768 per sample.
void save_wav(const AudioCarrier& carrier, const std::string& path);

} // namespace specest

#endif // SPECEST_WAV_HPP
