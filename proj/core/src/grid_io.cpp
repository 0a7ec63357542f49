#include "replan/grid_io.hpp"

#include <array>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace replan {

namespace {

void write_header(std::ostream& out, int side, double resolution,
                  const Eigen::Vector3i& offset) {
  out << "# side=" << side << " resolution=" << resolution << " offset="
      << offset.x() << ' ' << offset.y() << ' ' << offset.z() << '\n';
  out << "x,y,z,value\n";
}

std::ofstream open_or_throw(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  return out;
}

}  // namespace

void save_occupancy_csv(std::ostream& out, const OccupancyBuffer& buffer) {
  write_header(out, buffer.side(), buffer.resolution(), buffer.offset());
  const float prior = static_cast<float>(buffer.params().prior_log_odds);
  const int n = buffer.side();
  const Eigen::Vector3i o = buffer.offset();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Eigen::Vector3i idx = o + Eigen::Vector3i(x, y, z);
        const float value = static_cast<float>(buffer.log_odds(idx));
        if (value == prior) continue;
        out << idx.x() << ',' << idx.y() << ',' << idx.z() << ',' << value
            << '\n';
      }
}

void save_occupancy_csv(const std::filesystem::path& path,
                        const OccupancyBuffer& buffer) {
  auto out = open_or_throw(path);
  save_occupancy_csv(out, buffer);
}

void save_distance_csv(std::ostream& out, const DistanceField& field,
                       double max_distance) {
  write_header(out, field.side(), field.resolution(), field.offset());
  const int n = field.side();
  const Eigen::Vector3i o = field.offset();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Eigen::Vector3i idx = o + Eigen::Vector3i(x, y, z);
        const double value = field.voxel_distance(idx);
        if (value > max_distance) continue;
        out << idx.x() << ',' << idx.y() << ',' << idx.z() << ',' << value
            << '\n';
      }
}

void save_distance_csv(const std::filesystem::path& path,
                       const DistanceField& field, double max_distance) {
  auto out = open_or_throw(path);
  save_distance_csv(out, field, max_distance);
}

void save_occupancy_json(const std::filesystem::path& path,
                         const OccupancyBuffer& buffer) {
  nlohmann::json j;
  j["size_exponent"] = buffer.grid().size_exponent();
  j["resolution"] = buffer.resolution();
  const Eigen::Vector3i o = buffer.offset();
  j["offset"] = {o.x(), o.y(), o.z()};
  const Eigen::Vector3d c = buffer.grid().center();
  j["center"] = {c.x(), c.y(), c.z()};
  // Unwrapped to local x-major order so "offset" alone locates every cell.
  const int n = buffer.side();
  std::vector<float> cells;
  cells.reserve(static_cast<size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        cells.push_back(buffer.log_odds(o + Eigen::Vector3i(x, y, z)));
  j["log_odds"] = cells;
  auto out = open_or_throw(path);
  out << j << '\n';
}

void save_frames_jsonl(const std::filesystem::path& path,
                       const std::vector<DepthFrame>& frames) {
  auto out = open_or_throw(path);
  for (const DepthFrame& frame : frames) {
    nlohmann::json j;
    j["position"] = {frame.position.x(), frame.position.y(),
                     frame.position.z()};
    std::array<double, 9> r;
    Eigen::Map<Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(r.data()) =
        frame.rotation;
    j["rotation"] = r;
    nlohmann::json points = nlohmann::json::array();
    for (const Eigen::Vector3d& p : frame.points)
      points.push_back({p.x(), p.y(), p.z()});
    j["points"] = std::move(points);
    out << j << '\n';
  }
}

std::vector<DepthFrame> load_frames_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<DepthFrame> frames;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    DepthFrame frame;
    const auto& pos = j.at("position");
    frame.position = Eigen::Vector3d(pos.at(0), pos.at(1), pos.at(2));
    const auto& rot = j.at("rotation");
    for (int i = 0; i < 9; ++i) frame.rotation(i / 3, i % 3) = rot.at(i);
    for (const auto& p : j.at("points"))
      frame.points.emplace_back(p.at(0), p.at(1), p.at(2));
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace replan
