#include "specest/wav.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "specest/errors.hpp"

namespace specest {

namespace {

std::uint32_t read_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(static_cast<std::uint32_t>(p[0]) |
                                      (static_cast<std::uint32_t>(p[1]) << 8));
}

float read_f32(const unsigned char* p) {
    return std::bit_cast<float>(read_u32(p));
}

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 24) & 0xff));
}

struct FmtInfo {
    std::uint16_t format = 0;
    std::uint16_t channels = 0;
    std::uint32_t sample_rate = 0;
    std::uint16_t bits = 0;
};

} // namespace

AudioCarrier load_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("load_wav: cannot open " + path);
    std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>()};
    if (in.bad())
        throw IoError("load_wav: read failure on " + path);

    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
        throw MalformedFile("load_wav: not a RIFF/WAVE file: " + path);

    FmtInfo fmt;
    bool have_fmt = false;
    bool have_data = false;
    std::size_t data_off = 0;
    std::size_t data_len = 0;

    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const char* id = reinterpret_cast<const char*>(bytes.data() + pos);
        const std::uint32_t size = read_u32(bytes.data() + pos + 4);
        pos += 8;
        if (size > bytes.size() - pos)
            throw MalformedFile("load_wav: truncated chunk in " + path);
        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (size < 16)
                throw MalformedFile("load_wav: fmt chunk too small in " + path);
            fmt.format = read_u16(bytes.data() + pos);
            fmt.channels = read_u16(bytes.data() + pos + 2);
            fmt.sample_rate = read_u32(bytes.data() + pos + 4);
            fmt.bits = read_u16(bytes.data() + pos + 14);
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            data_off = pos;
            data_len = size;
            have_data = true;
        }
        pos += size + (size & 1); // chunks are word-aligned
    }

    if (!have_fmt || !have_data)
        throw MalformedFile("load_wav: missing fmt or data chunk in " + path);
    if (fmt.channels == 0 || fmt.sample_rate == 0)
        throw MalformedFile("load_wav: zero channel count or sample rate in " + path);

    std::size_t bytes_per_sample = 0;
    if (fmt.format == 1 && fmt.bits == 8)
        bytes_per_sample = 1;
    else if (fmt.format == 1 && fmt.bits == 16)
        bytes_per_sample = 2;
    else if (fmt.format == 3 && fmt.bits == 32)
        bytes_per_sample = 4;
    else
        throw UnsupportedFormat("load_wav: format " + std::to_string(fmt.format) + "/" +
                                std::to_string(fmt.bits) + " bits not supported (" + path + ")");

    const std::size_t frame_bytes = bytes_per_sample * fmt.channels;
    if (data_len % frame_bytes != 0)
        throw MalformedFile("load_wav: data size not a whole number of frames in " + path);
    const std::size_t frames = data_len / frame_bytes;
    if (frames == 0)
        throw MalformedFile("load_wav: empty data chunk in " + path);

    std::vector<double> mono(frames, 0.0);
    const unsigned char* data = bytes.data() + data_off;
    for (std::size_t n = 0; n < frames; ++n) {
        double acc = 0.0;
        for (std::uint16_t c = 0; c < fmt.channels; ++c) {
            const unsigned char* s = data + (n * fmt.channels + c) * bytes_per_sample;
            if (bytes_per_sample == 1)
                acc += (static_cast<double>(*s) - 128.0) / 128.0;
            else if (bytes_per_sample == 2)
                acc += static_cast<double>(static_cast<std::int16_t>(read_u16(s))) / 32768.0;
            else
                acc += static_cast<double>(read_f32(s));
        }
        mono[n] = acc / static_cast<double>(fmt.channels);
    }

    // Float payloads may legally exceed full scale; bring them back into the
    // carrier's [-1, 1] contract.
    double peak = 0.0;
    for (double v : mono)
        peak = std::max(peak, std::abs(v));
    if (peak > 1.0)
        for (double& v : mono)
            v /= peak;

    AudioCarrier carrier;
    carrier.samples = std::move(mono);
    carrier.sample_rate = static_cast<int>(fmt.sample_rate);
    carrier.origin = WavFileOrigin{path};
    return carrier;
}

void save_wav(const AudioCarrier& carrier, const std::string& path) {
    if (carrier.samples.empty())
        throw std::invalid_argument("save_wav: no samples");
    if (carrier.sample_rate < 1)
        throw std::invalid_argument("save_wav: sample rate must be positive");
    for (double s : carrier.samples)
        if (!(s >= -1.0 && s <= 1.0))
            throw std::invalid_argument("save_wav: sample outside [-1, 1]");

    const std::uint32_t data_size = static_cast<std::uint32_t>(carrier.samples.size() * 2);
    std::string out;
    out.reserve(44 + data_size);
    out.append("RIFF");
    put_u32(out, 36 + data_size);
    out.append("WAVE");
    out.append("fmt ");
    put_u32(out, 16);
    put_u16(out, 1); // PCM
    put_u16(out, 1); // mono
    put_u32(out, static_cast<std::uint32_t>(carrier.sample_rate));
    put_u32(out, static_cast<std::uint32_t>(carrier.sample_rate) * 2);
    put_u16(out, 2);  // block align
    put_u16(out, 16); // bits per sample
    out.append("data");
    put_u32(out, data_size);
    for (double s : carrier.samples) {
        long q = std::lround(s * 32768.0);
        q = std::clamp(q, -32768L, 32767L);
        put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw IoError("save_wav: cannot open " + path + " for writing");
    f.write(out.data(), static_cast<std::streamsize>(out.size()));
    f.flush();
    if (!f)
        throw IoError("save_wav: write failure on " + path);
}

} // namespace specest
